#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace flex;

namespace {

const EpsScalar eps = EpsScalar::eps();
const EpsScalar w = EpsScalar::eps(-1);
const Neutrix o = Neutrix::oslash();
const Neutrix L = Neutrix::pound();

ExternalScalar ext(const EpsScalar& r, const Neutrix& n) { return ExternalScalar(r, n); }
ExternalScalar ext(const char* text) { return parse_external(text); }

}  // namespace

TEST_CASE("field arithmetic on scale scalars") {
  CHECK((w + 2) * eps == 1 + 2 * eps);
  const EpsScalar f = (eps + 3) / (1 - eps * eps);
  CHECK((f - f).is_zero());
  CHECK((f - f) == EpsScalar());
  CHECK_THROWS_AS(f / EpsScalar(), Error);
  try {
    (void)(f / EpsScalar());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }

  // 1/(1-eps): compare the expansion with the geometric series computed by hand.
  const EpsScalar g = EpsScalar(1) / (1 - eps);
  CHECK(g.valuation() == 0);
  const auto terms = g.laurent_terms(3);
  CHECK(terms.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(terms.at(k) == 1);
  CHECK(!g.is_laurent_polynomial());
}

TEST_CASE("valuation") {
  CHECK(EpsScalar::monomial(3, 2).valuation() == 2);
  CHECK(!EpsScalar().valuation().has_value());
  // (eps+eps^2)/(1-eps) = eps + 2eps^2 + 2eps^3 + ...
  const EpsScalar f = (eps + eps * eps) / (1 - eps);
  CHECK(f.valuation() == 1);
  const auto t = f.laurent_terms(3);
  CHECK(t.at(1) == 1);
  CHECK(t.at(2) == 2);
  CHECK(t.at(3) == 2);
}

TEST_CASE("order on scale scalars") {
  CHECK(es_compare(w + 2, 1000) == Ordering::Greater);
  CHECK(es_compare(eps, eps * eps) == Ordering::Greater);
  CHECK(es_compare(mpq_class(15, 100), mpq_class(1, 10)) == Ordering::Greater);
  CHECK(es_compare(-eps, EpsScalar()) == Ordering::Less);
  CHECK(es_compare(1 + eps, 1 + eps) == Ordering::Equal);
  CHECK(classify(w + 2) == Magnitude::Unlimited);
  CHECK(classify(EpsScalar(mpq_class(-7, 3))) == Magnitude::Appreciable);
  CHECK(classify(eps) == Magnitude::Infinitesimal);
}

TEST_CASE("neutrix sum, product, scaling") {
  CHECK(ntx_sum(Neutrix::pound(1), Neutrix::oslash(1)) == Neutrix::pound(1));
  CHECK(ntx_sum(o, L) == L);
  CHECK(ntx_sum(Neutrix::zero(), Neutrix::oslash(-2)) == Neutrix::oslash(-2));

  CHECK(ntx_mul(o, L) == o);
  CHECK(ntx_mul(Neutrix::oslash(1), Neutrix::pound(-1)) == o);
  CHECK(ntx_mul(L, L) == L);
  CHECK(ntx_mul(Neutrix::zero(), L) == Neutrix::zero());
  CHECK(ntx_mul(Neutrix::full(), o) == Neutrix::full());

  CHECK(ntx_scale(eps, o) == Neutrix::oslash(1));
  CHECK(ntx_scale(EpsScalar(), L) == Neutrix::zero());
  CHECK(ntx_scale(w + 2, o) == Neutrix::oslash(-1));
  // Probe-level confirmation of the last identity.
  for (int k = -3; k <= 3; ++k)
    for (const auto& p : oracle::probes(k))
      CHECK(Neutrix::oslash(-1).contains(p) == oracle::probe_in_scaled(w + 2, o, k));
}

TEST_CASE("neutrix division") {
  CHECK(ntx_div(o, Neutrix::oslash(1)) == Neutrix::pound(-1));
  CHECK(ntx_div(Neutrix::oslash(1), Neutrix::zero()) == Neutrix::full());
  CHECK(ntx_div(o, o) == L);
  CHECK(ntx_div(L, L) == L);
  CHECK(ntx_div(o, L) == o);
  CHECK(ntx_div(L, o) == L);
  CHECK(ntx_div(Neutrix::zero(), o) == Neutrix::zero());
  CHECK(ntx_div(o, Neutrix::full()) == Neutrix::zero());
  CHECK(ntx_div(Neutrix::full(), o) == Neutrix::full());
  // c*o ⊆ o exactly when c is limited.
  for (int k = -3; k <= 3; ++k) CHECK(oracle::probe_in_quotient(o, o, k) == (k >= 0));
}

TEST_CASE("external addition") {
  CHECK(ext(2, Neutrix::pound(1)) + ext(1, Neutrix::oslash(1)) == ext(3, Neutrix::pound(1)));
  CHECK(ext(0, L) + ExternalScalar(-1) == ExternalScalar(L));
  CHECK(ext(2, o) - ext(2, o) == ExternalScalar(o));
}

TEST_CASE("external multiplication") {
  CHECK(ext(1, Neutrix::pound(2)) * ext(-1, Neutrix::oslash(1)) == ext(-1, Neutrix::oslash(1)));
  CHECK(ExternalScalar(o) * ExternalScalar(o) == ExternalScalar(o));
  CHECK(ext(2, o) * ext(3, Neutrix::pound(1)) == ext(6, o));
  CHECK(ext_mul(ext("1+o"), ext("eps")) == ext("eps+eps*o"));
}

TEST_CASE("external inverse") {
  CHECK(ext_inv(ext(1, o)) == ext(1, o));
  CHECK(ext_inv(ext(w, o)) == ext(eps, Neutrix::oslash(2)));
  CHECK_THROWS_AS(ext_inv(ExternalScalar(o)), Error);
  try {
    ext_inv(ExternalScalar(o));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotZeroless);
  }
}

TEST_CASE("external order") {
  CHECK(ext_lt(ext(2, o), ext(3, o)));
  CHECK(ext_leq(ExternalScalar(o), ExternalScalar(L)));
  CHECK(!ext_lt(ExternalScalar(L), ExternalScalar(o)));
  CHECK(ext_leq(ext(1, o), ext(1, L)));
  CHECK(ext_leq(ext(1, L), ext(1, o)));
  CHECK(!ext_lt(ext(1, o), ext(1, L)));
  CHECK(!ext_lt(ext(1, L), ext(1, o)));
}

TEST_CASE("membership and classification predicates") {
  CHECK(is_zeroless(ext(mpq_class(-3, 2), o)));
  CHECK(!is_zeroless(ExternalScalar(o)));
  CHECK(is_neutricial(ExternalScalar(o)));
  CHECK(ext_member(1 + eps, ext(1, o)));
  CHECK(!ext_member(EpsScalar(2), ext(1, o)));
  CHECK(classify(w + 2) == Magnitude::Unlimited);
}

TEST_CASE("absorbers and exploders") {
  CHECK(is_absorber(eps, o));
  CHECK(!is_absorber(EpsScalar(-2), o));
  CHECK(is_exploder(w, L));
  CHECK(!is_exploder(EpsScalar(5), L));
  CHECK(is_absorber(EpsScalar(), o));
  CHECK(!is_absorber(eps, Neutrix::zero()));
  CHECK(!is_absorber(eps, Neutrix::full()));
  CHECK(!is_exploder(w, Neutrix::full()));
}

TEST_CASE("relative imprecision") {
  CHECK(relative_imprecision(ext(2, Neutrix::pound(1))) == Neutrix::pound(1));
  CHECK(relative_imprecision(ext(w, o)) == Neutrix::oslash(1));
  CHECK_THROWS_AS(relative_imprecision(ExternalScalar(o)), Error);
}

TEST_CASE("canonical form") {
  CHECK(ext(-1, L) == ExternalScalar(L));
  CHECK(ext(-1, L).rep().is_zero());
  CHECK(ext(EpsScalar(1) / (1 - eps), o) == ext(1, o));
  CHECK(ext(3 + eps, Neutrix::pound(1)) == ext(3, Neutrix::pound(1)));
  CHECK(ext(w + 5, Neutrix::full()).rep().is_zero());
  // Zero neutrix keeps the representative as is.
  CHECK(ext(EpsScalar(1) / (1 - eps), Neutrix::zero()).rep() == EpsScalar(1) / (1 - eps));
}

TEST_CASE("text forms") {
  CHECK(ext(mpq_class(-1, 5), Neutrix::pound(2)).str() == "-0.2+eps^2*L");
  CHECK(ExternalScalar(Neutrix::oslash(-1)).str() == "eps^-1*o");
  CHECK((w * 2 - 1).str() == "2*eps^-1-1");
  CHECK((1 - 2 * eps).str() == "1-2*eps");
  CHECK(EpsScalar(mpq_class(1, 3)).str() == "1/3");
  CHECK(Neutrix::full().str() == "R");
  CHECK(Neutrix::zero().str() == "0");
}
