#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <stdexcept>

#include "apostol/identities.hpp"
#include "apostol/table1.hpp"

namespace apostol {

Suite parse_suite(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "structural") return Suite::Structural;
    if (name == "multiplication") return Suite::Multiplication;
    if (name == "connection") return Suite::Connection;
    if (name == "table1") return Suite::Table1;
    if (name == "lah") return Suite::Lah;
    if (name == "bbh") return Suite::Bbh;
    throw std::invalid_argument("unknown suite '" + name +
                                "' (expected all, structural, multiplication, connection, table1, lah or bbh)");
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::All: return "all";
        case Suite::Structural: return "structural";
        case Suite::Multiplication: return "multiplication";
        case Suite::Connection: return "connection";
        case Suite::Table1: return "table1";
        case Suite::Lah: return "lah";
        case Suite::Bbh: return "bbh";
    }
    return "?";
}

namespace {

// Draws use plain modular reduction of the engine output so the sequence
// does not depend on the standard library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    unsigned pick(unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng_() % (hi - lo + 1)); }

    Rational rational(const std::vector<Rational>& avoid = {}) {
        for (;;) {
            const long num = static_cast<long>(rng_() % 19) - 9;
            const long den = static_cast<long>(rng_() % 9) + 1;
            Rational q(num, den);
            q.canonicalize();
            if (std::find(avoid.begin(), avoid.end(), q) == avoid.end()) return q;
        }
    }

    std::vector<Rational> rationals(std::size_t count, const std::vector<Rational>& avoid) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < count; ++i) v.push_back(rational(avoid));
        return v;
    }

    // alphas for a family with the given k: alpha = 1 only where the
    // denominator factor keeps a valuation the prefactor can absorb.
    std::vector<Rational> alphas(unsigned r, unsigned k) {
        std::vector<Rational> v;
        for (unsigned i = 0; i < r; ++i) {
            if (k >= 1 && pick(0, 3) == 0)
                v.emplace_back(1);
            else
                v.push_back(rational({0, 1}));
        }
        return v;
    }

private:
    std::mt19937_64 rng_;
};

struct Task {
    IdentityId id;
    std::size_t sample;
    std::string label;
    std::function<IdentityReport()> run;
};

FamilyParams random_family(Sampler& s) {
    FamilyParams p;
    const unsigned r = s.pick(1, 3);
    p.m = s.pick(1, 3);
    p.k = s.pick(0, 2);
    p.alphas = s.alphas(r, p.k);
    p.log_a = s.rational();
    p.log_b = s.rational({p.log_a});
    p.log_c = s.rational();
    return p;
}

void add_structural(std::vector<Task>& tasks, Sampler& s, std::size_t i, std::size_t N) {
    const FamilyParams p = random_family(s);
    StructuralAux aux;
    aux.y = s.rational();
    aux.split = s.pick(0, static_cast<unsigned>(p.r()));
    for (unsigned left = static_cast<unsigned>(p.r()); left > 0;) {
        const unsigned b = s.pick(1, left);
        aux.blocks.push_back(b);
        aux.xs.push_back(s.rational());
        left -= b;
    }
    FamilyParams p1 = p;
    p1.m = 1;
    for (IdentityKind id : {IdentityKind::Addition, IdentityKind::Shift, IdentityKind::Expansion,
                            IdentityKind::Reflection, IdentityKind::Convolution, IdentityKind::Multinomial}) {
        const FamilyParams& q = id == IdentityKind::Reflection ? p1 : p;
        tasks.push_back({{id}, i, q.describe(), [id, q, aux, N] { return check_structural(id, q, aux, N); }});
    }
}

void add_multiplication(std::vector<Task>& tasks, Sampler& s, std::size_t i, std::size_t N) {
    FamilyParams p;
    if (i == 0) {
        p = FamilyParams::unified(2, {Rational(1)});
    } else {
        const unsigned r = s.pick(1, 2);
        const unsigned k = s.pick(1, 2);
        p = FamilyParams::unified(k, s.rationals(r, {0, 1, -1}));
    }
    MultiplicationArgs args;
    args.n = s.pick(2, 3);
    args.q = s.pick(2, 3);
    args.ell_max = std::min<std::size_t>(N, 6);
    for (IdentityKind id :
         {IdentityKind::NorlundA, IdentityKind::NorlundB, IdentityKind::CarlitzA, IdentityKind::CarlitzB})
        tasks.push_back({{id}, i, p.describe(), [id, p, args] { return check_multiplication(id, p, args); }});
}

void add_connection(std::vector<Task>& tasks, Sampler& s, std::size_t i, std::size_t N) {
    const FamilyParams p = i == 0 ? FamilyParams::bernoulli() : random_family(s);
    ConnectionAux base;
    base.nodes = s.rationals(std::max<std::size_t>(N, 1), {});
    const auto add = [&](IdentityKind id, OrthoFamily fam) {
        ConnectionAux aux = base;
        aux.ortho = fam;
        tasks.push_back({{id}, i, p.describe(), [id, p, aux, N] { return check_connection(id, p, aux, N); }});
    };
    add(IdentityKind::GenStirling, {});
    add(IdentityKind::Stirling, {});
    add(IdentityKind::Laguerre, OrthoFamily::laguerre(0));
    add(IdentityKind::Laguerre, OrthoFamily::laguerre(Rational(1, 2)));
    add(IdentityKind::Jacobi, OrthoFamily::jacobi(0, 0));
    add(IdentityKind::Jacobi, OrthoFamily::jacobi(Rational(1, 2), Rational(1, 3)));
    add(IdentityKind::Hermite, OrthoFamily::hermite());
}

void add_table1(std::vector<Task>& tasks, Sampler& s, std::size_t i, std::size_t N) {
    Table1Sample t;
    t.r = s.pick(1, 3);
    t.m = s.pick(1, 3);
    t.k = s.pick(0, 2);
    t.lambda = s.rational({0, 1, -1});
    t.alphas = s.rationals(t.r, {0, 1, -1});
    t.log_a = s.rational();
    t.log_b = s.rational({t.log_a});
    t.log_c = s.rational();
    t.log_scale = s.rational({0});
    for (int row = 1; row <= kTable1Rows; ++row)
        tasks.push_back({{IdentityKind::Table1Row, row}, i, t.describe(row), [row, t, N] { return table1_check(row, t, N); }});
}

void add_lah(std::vector<Task>& tasks, Sampler& s, std::size_t i, std::size_t N) {
    const std::size_t n = std::min<std::size_t>(N, s.pick(0, 6));
    {
        LahSample d;
        const unsigned r = s.pick(1, 2);
        d.k = s.pick(0, 1);
        d.alphas = s.rationals(r, {0, 1, -1});
        d.betas = d.alphas;
        const std::vector<Rational> extra = s.rationals(2, {0, 1});
        d.betas.insert(d.betas.end(), extra.begin(), extra.end());
        d.truncations = {r + 2};
        d.x = s.rational();
        d.n = n;
        tasks.push_back({{IdentityKind::Lah}, i, "terminating", [d] { return check_lah(d); }});
    }
    LahSample g;
    const unsigned r = s.pick(1, 2);
    g.k = s.pick(0, 1);
    g.alphas = s.rationals(r, {0, 1, -1});
    g.betas = s.rationals(r + 8, {0, 1});
    g.truncations = {r + 2, r + 4, r + 6, r + 8};
    g.x = s.rational();
    g.n = n;
    tasks.push_back({{IdentityKind::Lah}, i, "truncated", [g] { return check_lah(g); }});
}

void add_bbh(std::vector<Task>& tasks, Sampler& s, std::size_t i, std::size_t N) {
    BbhSample b;
    const unsigned r = s.pick(1, 2);
    b.k = s.pick(0, 2);
    b.alphas = s.rationals(r, {0, 1});
    b.a = s.rational();
    b.b = s.rational();
    do b.x = s.rational({0}); while (is_zero(1 + b.a * b.x));
    tasks.push_back({{IdentityKind::Bbh}, i, "bbh", [b, N] { return check_bbh(b, N); }});
}

std::vector<Task> build_tasks(const SuiteConfig& c) {
    std::vector<Task> tasks;
    const bool all = c.suite == Suite::All;
    // One sampler per suite, so adding suites to "all" does not perturb the others.
    const auto run = [&](Suite which, std::uint64_t salt, auto add) {
        if (!all && c.suite != which) return;
        Sampler s(c.seed ^ salt);
        for (std::size_t i = 0; i < c.samples; ++i) add(tasks, s, i, c.order);
    };
    run(Suite::Structural, 0x51, add_structural);
    run(Suite::Multiplication, 0x52, add_multiplication);
    run(Suite::Connection, 0x53, add_connection);
    run(Suite::Table1, 0x54, add_table1);
    run(Suite::Lah, 0x55, add_lah);
    run(Suite::Bbh, 0x56, add_bbh);
    return tasks;
}

std::optional<IdentityReport> execute(const Task& t, std::string& skipped) {
    try {
        IdentityReport r = t.run();
        r.sample = t.sample;
        return r;
    } catch (const PoleError& e) {
        skipped = t.id.str() + " sample " + std::to_string(t.sample) + " (" + t.label + "): " + e.what();
    } catch (const SingularParameterError& e) {
        skipped = t.id.str() + " sample " + std::to_string(t.sample) + " (" + t.label + "): " + e.what();
    }
    return std::nullopt;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
    const std::vector<Task> tasks = build_tasks(config);
    std::vector<std::optional<IdentityReport>> out(tasks.size());
    std::vector<std::string> skipped(tasks.size());

    const std::size_t jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = execute(tasks[i], skipped[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (std::size_t w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i; (i = next++) < tasks.size();) out[i] = execute(tasks[i], skipped[i]);
            }));
        for (auto& f : workers) f.get();
    }

    SuiteResult result;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (out[i]) result.reports.push_back(std::move(*out[i]));
        if (!skipped[i].empty()) result.skipped.push_back(std::move(skipped[i]));
    }
    std::stable_sort(result.reports.begin(), result.reports.end(), [](const IdentityReport& a, const IdentityReport& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.sample < b.sample;
    });
    return result;
}

}  // namespace apostol
