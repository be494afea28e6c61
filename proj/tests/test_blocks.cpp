#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepdef/blocks.hpp"

using namespace sepdef;

namespace {

const Ring kQ{};

/// the base field as a one-dimensional algebra (a rank-one block)
AlgebraPtr k_block(const Ring& rg) {
  return Algebra::from_table("k", rg, {"1"}, {{{{0, Scalar(1, rg)}}}},
                             {{0, Scalar(1, rg)}});
}

std::vector<size_t> summand_dims(const Decomposition& d) {
  std::vector<size_t> out;
  for (const auto& s : d.summands) out.push_back(s.dimension);
  std::sort(out.begin(), out.end());
  return out;
}

size_t sum_squares(const std::vector<size_t>& v) {
  size_t t = 0;
  for (size_t x : v) t += x * x;
  return t;
}

}  // namespace

TEST_CASE("partition counts and symmetric block dimensions") {
  std::vector<size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (size_t n = 0; n < p.size(); ++n) CHECK(partition_count(static_cast<int>(n)) == p[n]);
  CHECK(partitions(4).size() == 5);
  CHECK(hook_dimension({2, 1}) == 2);
  CHECK(hook_dimension({3, 2}) == 5);
  CHECK(qsn_block_dims(2) == std::vector<size_t>{1, 1});
  CHECK(qsn_block_dims(3) == std::vector<size_t>{1, 1, 2});
  CHECK(qsn_block_dims(4) == std::vector<size_t>{1, 1, 2, 3, 3});
  CHECK(qsn_block_dims(5) == std::vector<size_t>{1, 1, 4, 4, 5, 5, 6});
  // sum-of-squares audits run inside qsn_block_dims for every call above
}

TEST_CASE("smash products: orbits give matrix algebras over stabilizers") {
  Group C2 = Group::cyclic(2);
  Group C3 = Group::cyclic(3);

  // trivial action: n copies of the group algebra
  auto trivial = smash_decompose(4, C3, [](const GroupElement&) { return perm_identity(4); });
  CHECK(trivial.summands.size() == 4);
  for (const auto& s : trivial.summands) {
    CHECK(s.matrix_size == 1);
    CHECK(s.isotropy_order == 3);
  }
  CHECK(trivial.total_dim == 12);

  // the swap on the four product idempotents: orbits {ee},{ff},{ef,fe}
  auto swap4 = smash_decompose(4, C2, [&](const GroupElement& g) {
    return g == C2.id ? perm_identity(4) : Perm{1, 3, 2, 4};
  });
  REQUIRE(swap4.summands.size() == 3);
  CHECK(summand_dims(swap4) == std::vector<size_t>{2, 2, 4});
  CHECK(swap4.total_dim == 8);
  size_t two_dim = 0, four_dim = 0;
  for (const auto& s : swap4.summands) {
    if (s.matrix_size == 2) {
      ++four_dim;
      CHECK(s.isotropy_order == 1);  // M_2(k), trivial stabilizer
    } else {
      ++two_dim;
      CHECK(s.isotropy_order == 2);  // k C_2
    }
  }
  CHECK(two_dim == 2);
  CHECK(four_dim == 1);

  // regular action of C_3 on three points: a single M_3
  auto regular = smash_decompose(3, C3, [](const GroupElement& g) {
    Perm p(3);
    for (int i = 0; i < 3; ++i) p[i] = (i + g.exp) % 3 + 1;
    return p;
  });
  REQUIRE(regular.summands.size() == 1);
  CHECK(regular.summands[0].matrix_size == 3);
  CHECK(regular.summands[0].isotropy_order == 1);
  CHECK(regular.total_dim == 9);

  // a non-homomorphic assignment is rejected
  CHECK_THROWS_AS(smash_decompose(3, C3,
                                  [&](const GroupElement& g) {
                                    return g == C3.id ? perm_identity(3) : Perm{2, 1, 3};
                                  }),
                  ring_error);
}

TEST_CASE("wreath decomposition over multi-index orbits") {
  // one central separable block: a single summand A^(x n) (x) kG
  Group S2 = Group::symmetric(2);
  auto one = wreath_decompose({4}, 2, S2);
  REQUIRE(one.summands.size() == 1);
  CHECK(one.summands[0].matrix_size == 1);
  CHECK(one.summands[0].inner_dim == 16);
  CHECK(one.summands[0].isotropy_order == 2);
  CHECK(one.total_dim == 32);

  // A = k + k under S_3: binomial matrix sizes, product stabilizers
  Group S3 = Group::symmetric(3);
  auto kk3 = wreath_decompose({1, 1}, 3, S3);
  REQUIRE(kk3.summands.size() == 4);
  std::vector<size_t> msizes, isos;
  for (const auto& s : kk3.summands) {
    msizes.push_back(s.matrix_size);
    isos.push_back(s.isotropy_order);
  }
  std::sort(msizes.begin(), msizes.end());
  std::sort(isos.begin(), isos.end());
  CHECK(msizes == std::vector<size_t>{1, 1, 3, 3});
  CHECK(isos == std::vector<size_t>{2, 2, 6, 6});
  CHECK(kk3.total_dim == 48);

  // two rank-one blocks under the swap: two diagonal summands with C_2 and
  // one off-diagonal M_2
  auto kk2 = wreath_decompose({1, 1}, 2, S2);
  REQUIRE(kk2.summands.size() == 3);
  CHECK(summand_dims(kk2) == std::vector<size_t>{2, 2, 4});
  CHECK(kk2.total_dim == 8);

  CHECK_THROWS_AS(wreath_decompose({1, 1}, 40, S2, 1000), budget_error);
}

TEST_CASE("hyperoctahedral group algebra blocks") {
  auto b2 = qbn_blocks(2);
  CHECK(summand_dims(b2) == std::vector<size_t>{2, 2, 4});
  CHECK(b2.total_dim == 8);

  for (int n = 1; n <= 8; ++n) {
    auto d = qbn_blocks(n);
    CHECK(d.total_dim == factorial(n) << n);
    CHECK(d.audit_ok);
    // refined matrix blocks split the whole algebra
    CHECK(sum_squares(d.block_dims) == d.total_dim);
  }

  // block count = conjugacy class count (rational splitting field)
  for (int n = 1; n <= 4; ++n)
    CHECK(qbn_blocks(n).block_count == conjugacy_classes(Group::weyl_b(n)).size());
}

TEST_CASE("Weyl D_n group algebra blocks") {
  auto d3 = qdn_blocks(3);
  CHECK(d3.total_dim == 24);
  CHECK(d3.block_dims == std::vector<size_t>{1, 1, 2, 3, 3});
  // D_3 is S_4: identical matrix-block structure
  CHECK(d3.block_dims == qsn_block_dims(4));

  auto d4 = qdn_blocks(4);
  CHECK(d4.total_dim == 192);
  size_t middle = 0;
  for (const auto& s : d4.summands)
    if (s.index.size() == 2) middle += s.dimension;  // middle sub-summands
  CHECK(middle == 72);

  CHECK(qdn_blocks(5).total_dim == 1920);
  CHECK(qdn_blocks(6).total_dim == 23040);

  for (int n : {3, 4, 5}) {
    auto d = qdn_blocks(n);
    CHECK(d.audit_ok);
    CHECK(sum_squares(d.block_dims) == d.total_dim);
    CHECK(d.block_count == conjugacy_classes(Group::weyl_d(n)).size());
  }
}

TEST_CASE("string orbits of the extended symmetric action") {
  // n = 2: the all-e string is fixed by the whole group
  auto d2 = dn_orbit_data(2);
  REQUIRE(d2.orbits.size() == 2);
  CHECK(d2.sizes_partition);
  CHECK(d2.all_formulas_ok);
  for (const auto& o : d2.orbits) {
    if (o.size == 1) {
      CHECK(o.isotropy_order == 6);
      CHECK(o.m == 2);
    } else {
      CHECK(o.size == 3);
      CHECK(o.isotropy_order == 2);
    }
  }

  // n = 3: middle orbit of size 3 with stabilizer order 8
  auto d3 = dn_orbit_data(3);
  CHECK(d3.sizes_partition);
  CHECK(d3.all_formulas_ok);
  bool saw_middle = false;
  for (const auto& o : d3.orbits)
    if (o.middle) {
      saw_middle = true;
      CHECK(o.size == 3);
      CHECK(o.isotropy_order == 8);
      CHECK(o.isotropy_type == "S2 wr C2");
    }
  CHECK(saw_middle);

  for (int n = 1; n <= 8; ++n) {
    auto d = dn_orbit_data(n);
    CHECK(d.sizes_partition);
    CHECK(d.all_formulas_ok);
    size_t total = 0;
    for (const auto& o : d.orbits) {
      total += o.size;
      CHECK(o.size * o.isotropy_order == factorial(n + 1));
    }
    CHECK(total == (size_t(1) << n));
  }

  // structural identification of the product stabilizers
  for (int n = 2; n <= 4; ++n)
    for (const auto& o : dn_orbit_data(n).orbits)
      if (!o.middle) CHECK(orbit_isotropy_structural_check(n, o.m));
}

TEST_CASE("middle isotropy group is a wreath product") {
  for (int r : {1, 2, 3}) {
    auto cert = lemmaD_check(r);
    CAPTURE(r);
    CHECK(cert.fixes_rep);
    CHECK(cert.involution);
    CHECK(cert.conjugates_taus);
    CHECK(cert.swaps_factors);
    CHECK(cert.order_ok);
    CHECK(cert.ok());
  }
  CHECK(lemmaD_check(1).closure_order == 8);
  CHECK(lemmaD_check(2).closure_order == 72);
  CHECK(lemmaD_check(3).closure_order == 1152);
}

TEST_CASE("matrix-unit witnesses inside wreath products") {
  Group S2 = Group::symmetric(2);
  auto K = k_block(kQ);

  // two rank-one blocks swapped: the off-diagonal summand is M_2
  auto off = matrix_unit_check({K, K}, 2, S2, {0, 1});
  CHECK(off.coset_count == 2);
  CHECK(off.isotropy_order == 1);
  CHECK(off.ok());

  // diagonal index: upsilon realizes the swap through the switch element
  auto M2 = Algebra::matrix_algebra(2, kQ);
  auto diag = matrix_unit_check({M2, K}, 2, S2, {0, 0});
  CHECK(diag.coset_count == 1);
  CHECK(diag.isotropy_order == 2);
  CHECK(diag.ok());

  // rank-one diagonal as well (trivial switch)
  auto diagk = matrix_unit_check({K, K}, 2, S2, {1, 1});
  CHECK(diagk.coset_count == 1);
  CHECK(diagk.isotropy_order == 2);
  CHECK(diagk.ok());

  // a three-slot instance with a mixed index
  Group S3 = Group::symmetric(3);
  auto mixed = matrix_unit_check({K, K}, 3, S3, {0, 0, 1});
  CHECK(mixed.coset_count == 3);
  CHECK(mixed.isotropy_order == 2);
  CHECK(mixed.ok());

  // matrix block appearing twice in three slots
  auto mm = matrix_unit_check({M2, K}, 3, S3, {0, 1, 0});
  CHECK(mm.coset_count == 3);
  CHECK(mm.isotropy_order == 2);
  CHECK(mm.ok());

  CHECK_THROWS_AS(matrix_unit_check({K, K}, 5, Group::symmetric(5), {0, 0, 0, 0, 0}),
                  budget_error);
}
