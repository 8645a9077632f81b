// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit status is nonzero if any
// criterion fails.

#include "mzv/mzv.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mzv;
namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : " - ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Index z(std::initializer_list<int> v) { return Index::from_signed(v); }

// ----- criterion 1: theorem1(5) against the weight-12 table -------------

void criterion_theorem1_table() {
    auto t0 = std::chrono::steady_clock::now();
    auto c = theorem1(5).combination;
    // right-side coefficients as tabulated (combination stores LHS - RHS)
    std::vector<std::pair<Monomial, Rational>> table = {
        {mono(z({2, 10})), Rational(-9, 1024)},   {mono(z({3, 9})), Rational(-1, 64)},
        {mono(z({4, 8})), Rational(-7, 256)},     {mono(z({5, 7})), Rational(-3, 64)},
        {mono(z({6, 6})), Rational(-5, 64)},      {mono(z({7, 5})), Rational(-1, 8)},
        {mono(z({8, 4})), Rational(-3, 16)},      {mono(z({9, 3})), Rational(-1, 4)},
        {mono(z({10, 2})), Rational(767, 1024)},  {mono(z({3}), z({9})), Rational(623, 64)},
        {mono(z({5}), z({7})), Rational(629, 64)}, {mono(z({2}), z({10})), Rational(-10997, 1024)},
        {mono(z({6}), z({6})), Rational(-315, 64)}, {mono(z({4}), z({8})), Rational(-2505, 256)},
        {mono(z({12})), Rational(45065, 4096)},
    };
    bool ok = c.size() == table.size() + 2;
    ok = ok && c.coeff(mono(z({2, -10}))) == 1 && c.coeff(mono(z({1, -11}))) == 10;
    for (const auto& [m, rhs_coeff] : table) ok = ok && c.coeff(m) == -rhs_coeff;
    double dt = seconds_since(t0);
    report("theorem1(5) matches the paper table (15 coefficients)", ok && dt < 1.0,
           "elapsed " + std::to_string(dt) + "s");
}

// ----- criterion 2: proof replay ----------------------------------------

void criterion_proof_replay() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 1; k <= 20 && ok; ++k)
        ok = assemble_theorem1(k).combination == theorem1(k).combination;
    double dt = seconds_since(t0);
    report("assemble_theorem1(k) == theorem1(k) exactly, k = 1..20", ok && dt < 10.0,
           "elapsed " + std::to_string(dt) + "s");
}

// ----- criterion 3: numeric theorem1 at 50 digits ------------------------

void criterion_theorem1_numeric(ConstantCache& cache) {
    Precision p(50);
    mpfr_t bound;
    mpfr_init2(bound, 64);
    mpfr_set_str(bound, "1e-45", 10, MPFR_RNDD);
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 8; ++k) {
        auto rep = eval_identity(theorem1(k), p, &cache);
        mpfr_t am;
        mpfr_init2(am, 64);
        mpfr_abs(am, rep.residual.mid(), MPFR_RNDU);
        bool small = mpfr_cmp(am, bound) < 0;
        mpfr_clear(am);
        ok = ok && rep.pass && small;
        if (k == 8) detail = "k=8 residual " + rep.residual.mid_str(5);
    }
    mpfr_clear(bound);
    report("verify theorem1(k) at 50 digits, |residual| < 1e-45, k = 1..8", ok, detail);
}

// ----- criterion 4: pushdown at 40 digits --------------------------------

void criterion_pushdown(ConstantCache& cache) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = eval_identity(pushdown_39(), Precision(40), &cache);
    double dt = seconds_since(t0);
    report("verify pushdown39 at 40 digits (includes z(1,1,4,6))", rep.pass && dt < 300.0,
           "residual " + rep.residual.mid_str(5) + ", elapsed " + std::to_string(dt) + "s");
}

// ----- criterion 5: identity families through weight 12 ------------------

void criterion_families(ConstantCache& cache) {
    Precision p(40);
    bool ok = true;
    for (int k = 1; ok && k <= 5; ++k)
        for (int l = 1; ok && 2 * k + 2 * l <= 12; ++l) {
            ok = eval_identity(dihedral(k, l), p, &cache).pass;
            ok = ok && eval_identity(descent_even(k, l), p, &cache).pass;
        }
    report("dihedral(k,l) and descent_even(k,l) verify at 40 digits, 2k+2l <= 12", ok);

    // l = 1 specializations against the literal displayed forms
    bool exact = true;
    for (int k = 1; k <= 8; ++k) {
        LinComb<Monomial> dd;
        dd.add(mono(Index::from_signed({1, -2 * k}, 1)), 1);
        dd.add(mono(z({-2 * k, -2})), -1);
        dd.add(mono(z({-(2 * k + 2)})), -binom(2 * k + 1, 1));
        for (int r = 2; r <= 2 * k; ++r)
            dd.add(mono(z({-r}), z({2 * k + 2 - r})),
                   (r % 2 == 0 ? 1 : -1) * binom(r - 1, 1) + binom(r - 1, 2 * k - 1));
        exact = exact && dihedral(k, 1).combination == dd;

        LinComb<Monomial> zz;
        zz.add(mono(z({-2 * k, -2})), 1);
        for (int i = 2; i <= 2 * k; ++i) {
            zz.add(mono(z({2 * k + 2 - i, i})), -pow2(-i) * Rational(i - 1));
            zz.add(mono(z({i, 2 * k + 2 - i})), -pow2(-i) * binom(i - 1, 2 * k - 1));
        }
        zz.add(mono(z({2 * k, 2})), 1);
        for (int r = 2; r <= 2 * k; ++r) {
            Rational coef = Rational(r - 1) * pow2(-r);
            if (r % 2 != 0) coef = -coef;
            zz.add(mono(z({r}), z({2 * k + 2 - r})), -coef);
        }
        zz.add(mono(z({2 * k + 2})), Rational(6 * k + 1) * pow2(-(2 * k + 2)));
        exact = exact && descent_even(k, 1).combination == zz;
    }
    report("l = 1 specializations equal the displayed transcriptions, k <= 8", exact);
}

// ----- criterion 6: depth-1 reduction at 50 digits -----------------------

void criterion_depth1(ConstantCache& cache) {
    Precision p(50);
    bool ok = true;
    for (int n = 2; n <= 9; ++n) {
        auto rep = eval_identity(depth1_reduction(n), p, &cache);
        ok = ok && rep.residual.contains_zero();
    }
    report("depth-1 reduction holds within radii at 50 digits, n = 2..9", ok);
}

// ----- criterion 7: motivic D1 checks ------------------------------------

void criterion_motivic() {
    auto [s, w39] = index_to_word(z({-3, -9}));
    bool ok = reduce_D1(coaction_Dr(w39, 1)).is_zero();
    for (int k = 1; k <= 8; ++k) ok = ok && d1_log2_class(theorem1(k).combination).is_zero();
    report("D1 vanishes symbolically on z(-3,-9) and on lifted theorem1(k), k = 1..8", ok);
}

// ----- criterion 8: property suites --------------------------------------

Word random_word(std::mt19937& rng, int max_weight, bool convergent) {
    std::uniform_int_distribution<int> len(convergent ? 1 : 0, max_weight);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Letter> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int v = pick(rng);
        ls.push_back(v == 0 ? Letter::zero : v == 1 ? Letter::plus : Letter::minus);
    }
    if (convergent && !ls.empty()) {
        if (ls.front() == Letter::zero) ls.front() = Letter::minus;
        if (ls.back() == Letter::plus) ls.back() = Letter::zero;
        if (ls.size() == 1 && ls[0] == Letter::zero) ls[0] = Letter::minus;
    }
    return Word(std::move(ls));
}

void criterion_properties() {
    std::mt19937 rng(20250804);

    bool comm = true, assoc = true, mass = true;
    for (int i = 0; i < 500; ++i) {
        Word a = random_word(rng, 5, false), b = random_word(rng, 5, false),
             c = random_word(rng, 4, false);
        if (a.weight() + b.weight() > 10 || a.weight() + b.weight() + c.weight() > 10) continue;
        auto ab = shuffle(a, b);
        comm = comm && ab == shuffle(b, a);
        assoc = assoc && shuffle(ab, LinComb<Word>::unit(c)) ==
                             shuffle(LinComb<Word>::unit(a), shuffle(b, c));
        mass = mass && ab.mass() == Rational(binomial_int(long(a.weight() + b.weight()),
                                                           long(a.weight())));
    }
    report("shuffle commutativity/associativity/mass on 500 random cases", comm && assoc && mass);

    bool idem = true, homo = true;
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 12, false);
        auto once = shuffle_regularize(w);
        idem = idem && shuffle_regularize(once) == once;
    }
    for (int i = 0; i < 200; ++i) {
        Word a = random_word(rng, 5, false), b = random_word(rng, 5, false);
        if (a.weight() + b.weight() > 10) continue;
        homo = homo && shuffle_regularize(shuffle(a, b)) ==
                           shuffle(shuffle_regularize(a), shuffle_regularize(b));
    }
    report("regularization idempotence (200) and homomorphism (200)", idem && homo);

    Precision p(30);
    bool sound = true;
    int done = 0;
    while (done < 50) {
        Word a = random_word(rng, 4, true), b = random_word(rng, 4, true);
        if (a.weight() + b.weight() > 8 || !is_convergent(a) || !is_convergent(b)) continue;
        Ball lhs(p.working_bits());
        auto sh = shuffle(a, b);
        for (const auto& [w, q] : sh.terms())
            lhs += Ball::from_rational(q, p.working_bits()) * eval_word(w, p);
        sound = sound && lhs.overlaps(eval_word(a, p) * eval_word(b, p));
        ++done;
    }
    report("numeric shuffle soundness on 50 random convergent pairs at 30 digits", sound);

    bool mono_ok = true;
    for (auto ix : {z({2, -2}), z({-3, -9}), z({1, 1, 4, 6})}) {
        Ball b1 = eval_index(ix, Precision(15), nullptr);
        Ball b2 = eval_index(ix, Precision(30), nullptr);
        Ball b3 = eval_index(ix, Precision(45), nullptr);
        mono_ok = mono_ok && b1.overlaps(b2) && b2.overlaps(b3) && b1.overlaps(b3);
    }
    report("ball containment monotone across 3 precision levels", mono_ok);
}

// ----- criterion 9: oracle equivalence ------------------------------------

// Direct truncated summation of the defining nested series, with the
// alternating outer tail bracketed by consecutive partial sums.
std::pair<double, double> direct_bracketed_sum(const Index& ix, long n_max) {
    int d = ix.depth();
    std::vector<double> sums(d + 1, 0.0);
    sums[0] = 1.0;
    double prev = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        for (int j = d; j >= 1; --j) {
            double sgn = (ix.eps[j - 1] == -1 && (n & 1)) ? -1.0 : 1.0;
            double inner = (j == 1) ? 1.0 : sums[j - 1];
            if (j == d) prev = sums[d];
            sums[j] += sgn * inner / std::pow(double(n), ix.ks[j - 1]);
        }
    }
    double width = std::abs(sums[d] - prev);
    return {0.5 * (sums[d] + prev), 0.5 * width + 1e-9};
}

void criterion_oracle(ConstantCache& cache) {
    std::vector<Index> words = {z({-2}),    z({-3}),    z({-1}),    z({1, -3}), z({2, -2}),
                                z({1, -1}), z({2, -4}), z({3, -1}), z({1, -5}), z({4, -2})};
    bool ok = true;
    for (const auto& ix : words) {
        auto [omid, orad] = direct_bracketed_sum(ix, 300000);
        Ball b = eval_index(ix, Precision(30), &cache);
        double diff = std::abs(b.mid_double() - omid);
        ok = ok && diff <= orad + 1e-25;  // engine radius ~1e-30
    }
    report("Hoelder evaluation matches bracketed direct summation on 10 words", ok);
}

// ----- golden + schema spot checks (release hygiene) ----------------------

void criterion_goldens(const std::string& golden_dir, const std::string& schema_path) {
    Json t5 = identity_to_json(theorem1(5));
    Json pd = identity_to_json(pushdown_39());
    bool ok = t5.dump(2) + "\n" == read_file(golden_dir + "/theorem1_k5.json") &&
              pd.dump(2) + "\n" == read_file(golden_dir + "/pushdown39.json");
    Json schema = Json::parse(read_file(schema_path), nullptr, false);
    ok = ok && !schema.is_discarded() && schema.contains("$defs");
    report("golden serializations bit-exact and schema present", ok);
}

}  // namespace

int main(int argc, char** argv) {
    std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";
    std::string schema_path = argc > 2 ? argv[2] : "schemas/report.schema.json";

    ConstantCache cache;
    auto t0 = std::chrono::steady_clock::now();

    criterion_theorem1_table();
    criterion_proof_replay();
    criterion_theorem1_numeric(cache);
    criterion_pushdown(cache);
    criterion_families(cache);
    criterion_depth1(cache);
    criterion_motivic();
    criterion_properties();
    criterion_oracle(cache);
    criterion_goldens(golden_dir, schema_path);

    std::printf("%d criterion(s) failed; total %.2fs\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
