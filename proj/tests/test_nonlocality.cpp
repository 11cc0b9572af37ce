#include "phasekit/nonlocality.hpp"

#include "phasekit/atomlattice.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace phasekit;
using namespace phasekit::nonlocality;
using phasekit::atomlattice::named_state;
using std::numbers::pi;

namespace {

// Test-local brute force over all ±1 assignments, independent of
// classical_search.
bool oracle_satisfiable(const std::vector<ClassicalConstraint>& constraints, int atoms) {
  const int vars = 2 * atoms;
  for (unsigned x = 0; x < (1u << vars); ++x) {
    std::vector<int> m(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) m[static_cast<std::size_t>(i)] = (x >> i) & 1u ? -1 : 1;
    bool ok = true;
    for (const auto& c : constraints) ok &= constraint_satisfied(c, m);
    if (ok) return true;
  }
  return false;
}

std::vector<ClassicalConstraint> chi10_family() {
  return {
      {PauliWord::parse("1111"), +1}, {PauliWord::parse("2222"), +1},
      {PauliWord::parse("1122"), -1}, {PauliWord::parse("2211"), -1},
      {PauliWord::parse("1212"), +1}, {PauliWord::parse("1221"), +1},
      {PauliWord::parse("2121"), +1}, {PauliWord::parse("2112"), +1},
  };
}

}  // namespace

TEST_CASE("chi10 is a +1 eigenstate of the three uniform words") {
  const StateVector chi = named_state("chi10");
  for (const char* w : {"1111", "2222", "3333"}) {
    const EigencheckResult r = word_eigencheck(chi, PauliWord::parse(w));
    REQUIRE(r.eigenvalue.has_value());
    CHECK(*r.eigenvalue == +1);
    CHECK(r.residual < 1e-12);
  }
}

TEST_CASE("chi10 carries the printed sign pattern on the pair words") {
  const StateVector chi = named_state("chi10");
  const std::pair<const char*, int> pattern[] = {
      {"1122", -1}, {"2211", -1}, {"1212", +1},
      {"1221", +1}, {"2121", +1}, {"2112", +1},
  };
  for (const auto& [w, sign] : pattern) {
    const EigencheckResult r = word_eigencheck(chi, PauliWord::parse(w));
    REQUIRE(r.eigenvalue.has_value());
    CHECK(*r.eigenvalue == sign);
    CHECK(r.residual < 1e-12);
  }
}

TEST_CASE("a product ket is not an eigenstate of the uniform flip word") {
  const StateVector eegg = StateVector::basis_state(
      atomlattice::full_atomic_basis(4),
      *atomlattice::full_atomic_basis(4).index_of(BasisLabel::atoms("eegg")));
  const EigencheckResult r = word_eigencheck(eegg, PauliWord::parse("1111"));
  CHECK_FALSE(r.eigenvalue.has_value());
  CHECK(r.residual == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("eigencheck matches the dense word-operator route") {
  const StateVector chi = named_state("chi21");
  const StateVector full = atomlattice::promote_to_full_atomic(chi);
  for (unsigned w = 0; w < 16; ++w) {
    std::string digits;
    for (int a = 3; a >= 0; --a) digits += ((w >> a) & 1u) ? '2' : '1';
    const PauliWord word = PauliWord::parse(digits);
    const EigencheckResult r = word_eigencheck(chi, word);
    const Complex ev = expectation(word_operator(word), full);
    const bool unit_modulus = std::abs(std::abs(ev) - 1.0) < 1e-10;
    CHECK(r.eigenvalue.has_value() == unit_modulus);
    if (r.eigenvalue) CHECK(std::abs(ev - Complex(double(*r.eigenvalue), 0.0)) < 1e-10);
  }
}

TEST_CASE("single uniform constraint is satisfied by the all-plus assignment") {
  const SearchResult r = classical_search({{PauliWord::parse("1111"), +1}});
  REQUIRE(r.satisfiable);
  for (int v : r.assignment) CHECK(v == +1);  // lexicographically first
}

TEST_CASE("the derived chi10 constraint family is UNSAT") {
  const StateVector chi = named_state("chi10");
  const auto derived = derive_constraints(chi);
  REQUIRE(derived.size() == 8);
  // Lexicographic scan order over words; freeze the full sign pattern.
  const std::pair<const char*, int> expected[] = {
      {"1111", +1}, {"1122", -1}, {"1212", +1}, {"1221", +1},
      {"2112", +1}, {"2121", +1}, {"2211", -1}, {"2222", +1},
  };
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(derived[i].word.str() == expected[i].first);
    CHECK(derived[i].required_sign == expected[i].second);
  }
  CHECK_FALSE(classical_search(derived).satisfiable);
  CHECK_FALSE(oracle_satisfiable(derived, 4));
}

TEST_CASE("all three chi_{p0} states refute classical assignments") {
  for (const char* tag : {"chi10", "chi20", "chi30"}) {
    const auto derived = derive_constraints(named_state(tag));
    CHECK_FALSE(classical_search(derived).satisfiable);
  }
}

TEST_CASE("pair words alone (without the uniform ones) are satisfiable") {
  auto family = chi10_family();
  std::vector<ClassicalConstraint> pairs(family.begin() + 2, family.end());
  const SearchResult r = classical_search(pairs);
  CHECK(r.satisfiable == oracle_satisfiable(pairs, 4));
  REQUIRE(r.satisfiable);
  for (const auto& c : pairs) CHECK(constraint_satisfied(c, r.assignment));
}

TEST_CASE("the full eigenvalue family stays UNSAT under single removals") {
  // The scanned family contains several overlapping parity contradictions,
  // so deleting one constraint never restores satisfiability; the minimal
  // four-constraint core below is where single removals flip the verdict.
  const auto family = chi10_family();
  for (std::size_t skip = 0; skip < family.size(); ++skip) {
    std::vector<ClassicalConstraint> reduced;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i != skip) reduced.push_back(family[i]);
    }
    CHECK_FALSE(classical_search(reduced).satisfiable);
    CHECK_FALSE(oracle_satisfiable(reduced, 4));
  }
}

TEST_CASE("the four-constraint core is minimally contradictory") {
  const std::vector<ClassicalConstraint> core = {
      {PauliWord::parse("1111"), +1},
      {PauliWord::parse("1122"), -1},
      {PauliWord::parse("1212"), +1},
      {PauliWord::parse("1221"), +1},
  };
  CHECK_FALSE(classical_search(core).satisfiable);
  for (std::size_t skip = 0; skip < core.size(); ++skip) {
    std::vector<ClassicalConstraint> reduced;
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (i != skip) reduced.push_back(core[i]);
    }
    const SearchResult r = classical_search(reduced);
    CHECK(r.satisfiable);
    CHECK(oracle_satisfiable(reduced, 4));
  }
}

TEST_CASE("the GHZ triple refutation is minimal as scanned") {
  const auto derived = derive_constraints(named_state("ghz3+"));
  REQUIRE(derived.size() == 4);
  CHECK(derived[0].word.str() == "111");
  CHECK(derived[0].required_sign == +1);
  for (std::size_t i = 1; i < 4; ++i) CHECK(derived[i].required_sign == -1);
  CHECK_FALSE(classical_search(derived).satisfiable);
  for (std::size_t skip = 0; skip < derived.size(); ++skip) {
    std::vector<ClassicalConstraint> reduced;
    for (std::size_t i = 0; i < derived.size(); ++i) {
      if (i != skip) reduced.push_back(derived[i]);
    }
    CHECK(classical_search(reduced).satisfiable);
  }
}

TEST_CASE("classical constraints reject sigma3 letters and oversized systems") {
  CHECK_THROWS_AS(constraint_satisfied({PauliWord::parse("3111"), +1},
                                       std::vector<int>(8, 1)),
                  std::invalid_argument);
  std::vector<ClassicalConstraint> big = {{PauliWord::parse("111111111"), +1}};
  CHECK_THROWS_AS(classical_search(big), std::invalid_argument);
}

TEST_CASE("pair observable at theta = 0 is the pair parity") {
  const Operator a = pair_observable(0.0, Side::AtomsOneTwo);
  const Basis full = atomlattice::full_atomic_basis(4);
  const auto ket = [&](const char* s) {
    return StateVector::basis_state(full, *full.index_of(BasisLabel::atoms(s)));
  };
  CHECK(expectation(a, ket("eegg")).real() == doctest::Approx(1.0));
  CHECK(expectation(a, ket("ggee")).real() == doctest::Approx(-1.0));
  CHECK(std::abs(expectation(a, ket("egeg"))) == 0.0);
}

TEST_CASE("pair observable squares to the projector onto the ee/gg span") {
  const double theta = 0.83;
  const Operator a = pair_observable(theta, Side::AtomsOneTwo);
  Matrix proj = Matrix::Zero(4, 4);
  proj(0, 0) = 1.0;  // |ee⟩
  proj(3, 3) = 1.0;  // |gg⟩
  Matrix expected = Matrix::Zero(16, 16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      expected.block(4 * i, 4 * j, 4, 4) = proj(i, j) * Matrix::Identity(4, 4);
    }
  }
  CHECK(max_abs(a.entries() * a.entries() - expected) < 1e-15);
}

TEST_CASE("pair correlator on chi10 is -cos(theta_a + theta_b)") {
  const StateVector chi = atomlattice::promote_to_full_atomic(named_state("chi10"));
  for (double ta : {0.0, pi, 1.1}) {
    for (double tb : {-0.4, 0.0, 0.9}) {
      const Operator a = pair_observable(ta, Side::AtomsOneTwo);
      const Operator b = pair_observable(tb, Side::AtomsThreeFour);
      const Complex value =
          chi.amplitudes().dot(a.entries() * (b.entries() * chi.amplitudes()));
      CHECK(value.real() == doctest::Approx(-std::cos(ta + tb)).epsilon(1e-12));
      CHECK(std::abs(value.imag()) < 1e-14);
    }
  }
}

TEST_CASE("chsh correlators reproduce the theta_a = pi pattern") {
  const StateVector chi = named_state("chi10");
  for (double tb : {-1.3, -pi / 4, 0.2, 1.0}) {
    const ChshResult r = chsh_scan(chi, {pi, pi / 2, tb, -tb});
    CHECK(r.correlators[0] == doctest::Approx(std::cos(tb)).epsilon(1e-12));
    CHECK(r.correlators[1] == doctest::Approx(std::cos(tb)).epsilon(1e-12));
    CHECK(r.correlators[2] == doctest::Approx(std::sin(tb)).epsilon(1e-12));
    CHECK(r.correlators[3] == doctest::Approx(-std::sin(tb)).epsilon(1e-12));
    // The printed one-minus ordering (minus on <ab'>) collapses to zero here;
    // the minus-on-<a'b> placement carries the |cos - sin| bound.
    CHECK(r.variant_values[1] < 1e-12);
    CHECK(r.variant_values[2] == doctest::Approx(2.0 * std::abs(std::cos(tb) - std::sin(tb))));
  }
}

TEST_CASE("chsh reaches 2 sqrt 2 at theta_b = -pi/4") {
  const ChshResult r = chsh_scan(named_state("chi10"), {pi, pi / 2, -pi / 4, pi / 4});
  CHECK(r.s_max == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.best_variant == 2);
  CHECK(std::string(kChshVariantNames[2]) == "-a'b");
}

TEST_CASE("Tsirelson ceiling holds over a full angle grid") {
  const StateVector chi = named_state("chi10");
  const double bound = 2.0 * std::sqrt(2.0) + 1e-9;
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back(-pi + i * (2.0 * pi / 9.0));
  for (double ta : grid) {
    for (double tap : grid) {
      for (double tb : grid) {
        for (double tbp : grid) {
          CHECK(chsh_scan(chi, {ta, tap, tb, tbp}).s_max <= bound);
        }
      }
    }
  }
}

TEST_CASE("factorized states stay below the classical bound") {
  const Basis pair_basis = atomlattice::full_atomic_basis(2);
  Vector u(4), v(4);
  u << 0.8, 0.0, 0.0, 0.6;
  v << std::cos(0.3), 0.0, 0.0, Complex(0.0, std::sin(0.3));
  const StateVector product = tensor_product(StateVector::normalized(pair_basis, u),
                                             StateVector::normalized(pair_basis, v));
  for (double ta : {0.0, 0.7, pi / 2}) {
    for (double tb : {-0.9, 0.4}) {
      const ChshResult r = chsh_scan(product, {ta, ta + 0.5, tb, -tb});
      CHECK(r.s_max <= 2.0 + 1e-10);
    }
  }
}

TEST_CASE("word parsing validates input") {
  CHECK(PauliWord::parse("1122").str() == "1122");
  CHECK(PauliWord::parse("i3").letters[0] == PauliLetter::Id);
  CHECK_THROWS_AS(PauliWord::parse("14"), std::invalid_argument);
  const StateVector chi = named_state("chi10");
  CHECK_THROWS_AS(word_eigencheck(chi, PauliWord::parse("11")), std::invalid_argument);
}
