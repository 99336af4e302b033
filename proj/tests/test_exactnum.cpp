#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tfw/errors.hpp"
#include "tfw/novikov.hpp"

using namespace tfw;

namespace {

SymbolsPtr base_table() {
    auto tab = std::make_shared<SymbolTable>();
    tab->add("pi", pi_multiple_provider(Rational(1)));
    return tab;
}

Valuation cut(const SymbolsPtr&, long c) { return Valuation::constant(Rational(c)); }

Novikov T(const SymbolsPtr& tab, const Valuation& cutoff, const Rational& v) {
    return Novikov::monomial(tab, cutoff, Valuation::constant(v), Unit::one());
}

// random Novikov scalar with exact real rational coefficients
Novikov random_scalar(std::mt19937_64& rng, const SymbolsPtr& tab, const Valuation& cutoff) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<int> vnum(0, 40);
    std::vector<Novikov::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational v(vnum(rng), den(rng));
        v.canonicalize();
        int a = num(rng);
        if (a == 0) a = 1;
        terms.push_back({Valuation::constant(v), Unit::real(rat(a, den(rng)))});
    }
    return Novikov::make(tab, cutoff, std::move(terms));
}

} // namespace

TEST_CASE("compare: identical vectors are equal") {
    auto tab = base_table();
    CHECK(compare(Valuation(), Valuation(), *tab) == Ordering::Equal);
    Valuation v = Valuation::symbol(tab->id_or_throw("pi"), Rational(2));
    CHECK(compare(v, v, *tab) == Ordering::Equal);
}

TEST_CASE("compare: positive generator beats zero") {
    auto tab = base_table();
    // 2*pi*log|q| with log|q| = 1: the valuation 2*pi
    Valuation v = Valuation::symbol(tab->id_or_throw("pi"), Rational(2));
    CHECK(compare(v, Valuation(), *tab) == Ordering::Greater);
}

TEST_CASE("compare: refinement decides overlapping intervals") {
    auto tab = std::make_shared<SymbolTable>();
    // refinable generators converging to 1.05 and 1.45: 3*g1 vs 2*g2 needs
    // refinement since the first enclosures overlap
    auto make_prov = [](double target) {
        return [target](long prec) {
            double w = std::pow(2.0, -static_cast<double>(std::min(prec / 16, 40L)));
            mpq_t lo, hi;
            mpq_init(lo);
            mpq_init(hi);
            mpq_set_d(lo, target - w);
            mpq_set_d(hi, target + w);
            QInterval iv{Rational(lo), Rational(hi)};
            mpq_clear(lo);
            mpq_clear(hi);
            return iv;
        };
    };
    int g1 = tab->add("g1", make_prov(1.05));
    int g2 = tab->add("g2", make_prov(1.45));
    Valuation a = Valuation::symbol(g1, Rational(3)); // -> 3.15
    Valuation b = Valuation::symbol(g2, Rational(2)); // -> 2.90
    CHECK(compare(a, b, *tab) == Ordering::Greater);
    // oracle: high-precision sign of 3*1.05 - 2*1.45
    CHECK(oracle::mpfr_sign_of({{1.05, Rational(3)}, {1.45, Rational(-2)}}) > 0);
}

TEST_CASE("compare: ambiguity is a loud error") {
    auto tab = std::make_shared<SymbolTable>();
    int g = tab->add("g", fixed_interval_provider(QInterval(Rational(-1), Rational(1))));
    Valuation a = Valuation::symbol(g, Rational(1));
    CHECK_THROWS_AS(compare(a, Valuation(), *tab), NumericError);
}

TEST_CASE("novikov: additive inverse and exponent additivity") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 50);
    Novikov x = T(tab, cutoff, rat(3, 2));
    CHECK((x + (-x)).is_zero());
    Novikov y = T(tab, cutoff, rat(5, 3));
    Novikov xy = x * y;
    CHECK(xy.val().identical(Valuation::constant(rat(3, 2) + rat(5, 3))));
}

TEST_CASE("novikov: (1 + T)(1 - T) with cutoff 3 is 1 - T^2") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 3);
    Novikov one = Novikov::one(tab, cutoff);
    Novikov t = T(tab, cutoff, Rational(1));
    Novikov prod = (one + t) * (one - t);
    Novikov expect = one - t * t;
    CHECK(prod.equals(expect));
}

TEST_CASE("novikov: cutoff mismatch is rejected") {
    auto tab = base_table();
    Novikov a = Novikov::one(tab, cut(tab, 3));
    Novikov b = Novikov::one(tab, cut(tab, 4));
    CHECK_THROWS_AS(a + b, DomainError);
}

TEST_CASE("invert: identity, geometric series, unitary monomial") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 4);
    Novikov one = Novikov::one(tab, cutoff);
    CHECK(one.invert().equals(one));

    Novikov t = T(tab, cutoff, Rational(1));
    Novikov inv = (one - t).invert();
    Novikov expect = one + t + t * t + t * t * t;
    CHECK(inv.equals(expect));

    // invert(T^a xi) = T^{-a} conj(xi) for unitary xi: check product = 1
    Novikov m = Novikov::monomial(tab, cutoff, Valuation::constant(rat(7, 5)),
                                  Unit::exact(Rational(1), rat(1, 3)));
    Novikov p = m * m.invert();
    CHECK(p.equals(one));
    CHECK_THROWS_AS(Novikov::zero(tab, cutoff).invert(), DomainError);
}

TEST_CASE("val: leading term, with pi-valued exponents") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 100);
    // val(T^{2 pi log|q|} xi) = 2 pi log|q| with log|q| = 1
    Valuation tp = Valuation::symbol(tab->id_or_throw("pi"), Rational(2));
    Novikov q = Novikov::monomial(tab, cutoff, tp, Unit::exact(Rational(1), rat(1, 4)));
    CHECK(q.val().identical(tp));

    Novikov one = Novikov::one(tab, cutoff);
    Novikov t = T(tab, cutoff, Rational(1));
    CHECK((one + t).val().is_zero());

    // val((T + T^2) T^3) = 4
    Novikov t2 = T(tab, cutoff, Rational(2));
    Novikov t3 = T(tab, cutoff, Rational(3));
    CHECK(((t + t2) * t3).val().identical(Valuation::constant(Rational(4))));
    CHECK_THROWS_AS(Novikov::zero(tab, cutoff).val(), DomainError);
}

TEST_CASE("property: field axioms on 1000 random triples") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 30);
    std::mt19937_64 rng(20240915);
    for (int i = 0; i < 1000; ++i) {
        Novikov x = random_scalar(rng, tab, cutoff);
        Novikov y = random_scalar(rng, tab, cutoff);
        Novikov z = random_scalar(rng, tab, cutoff);
        CHECK(((x + y) + z).equals(x + (y + z)));
        CHECK((x * (y + z)).equals(x * y + x * z));
    }
}

TEST_CASE("property: inverse correctness on 500 random nonzero scalars") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 30);
    std::mt19937_64 rng(321);
    int done = 0;
    while (done < 500) {
        Novikov x = random_scalar(rng, tab, cutoff);
        if (x.is_zero()) continue;
        ++done;
        Novikov residue = x * x.invert() - Novikov::one(tab, cutoff);
        if (!residue.is_zero()) {
            // every surviving term must sit at valuation >= cutoff - val(x)
            Valuation bound = cutoff - x.val();
            for (const auto& t : residue.terms())
                CHECK(compare(t.val, bound, *tab) != Ordering::Less);
        }
    }
}

TEST_CASE("property: val is multiplicative, ultrametric for sums") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 60);
    std::mt19937_64 rng(777);
    for (int i = 0; i < 500; ++i) {
        Novikov x = random_scalar(rng, tab, cutoff);
        Novikov y = random_scalar(rng, tab, cutoff);
        if (!x.is_zero() && !y.is_zero()) {
            Novikov xy = x * y;
            if (!xy.is_zero()) CHECK(xy.val().identical(x.val() + y.val()));
        }
        Novikov s = x + y;
        if (!x.is_zero() && !y.is_zero() && !s.is_zero()) {
            const Valuation& mn = compare(x.val(), y.val(), *tab) == Ordering::Less ? x.val()
                                                                                    : y.val();
            CHECK(compare(s.val(), mn, *tab) != Ordering::Less);
        }
    }
}

TEST_CASE("property: canonical form is idempotent") {
    auto tab = base_table();
    Valuation cutoff = cut(tab, 30);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        Novikov x = random_scalar(rng, tab, cutoff);
        std::vector<Novikov::Term> t(x.terms().begin(), x.terms().end());
        Novikov again = Novikov::make(tab, cutoff, std::move(t));
        CHECK(again.equals(x));
        CHECK(again.terms().size() == x.terms().size());
    }
}

TEST_CASE("unit coefficients: exact phase path round-trips") {
    Unit a = Unit::exact(Rational(1), rat(1, 3));
    Unit b = a * a * a;
    CHECK(b.has_exact());
    CHECK(b.phase_pi() == 1);
    CHECK((a * a.inverse()).equals(Unit::one()));
    Unit c = Unit::real(rat(3, 4)) + Unit::real(rat(-3, 4));
    CHECK(c.is_zero());
}
