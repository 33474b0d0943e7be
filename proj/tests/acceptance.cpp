// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <unistd.h>

#include "generators.hpp"
#include "json.hpp"
#include "parastab/cli.hpp"
#include "parastab/fine_moduli.hpp"
#include "parastab/git_grass.hpp"
#include "parastab/logops.hpp"

using namespace parastab;
using namespace parastab::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Counts checks and keeps the first failure message.
struct Tally {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures == 0) return {true, summary};
        return {false, summary + "; " + std::to_string(failures) + "/" + std::to_string(checks) +
                           " checks failed, first: " + first_failure};
    }
};

// ---- 1. HN suite ----

Outcome hn_suite() {
    Rng rng(1001);
    Tally t;
    long ties = 0, steps = 0;
    const int instances = 200;
    for (int trial = 0; trial < instances; ++trial) {
        PrimeField f(trial % 2 ? 5 : 3);
        const std::size_t r = uniform(rng, 1, 4);
        auto sys = random_system(f, r, uniform(rng, 1, 3), rng);
        Budget b;
        const auto hn = hn_filtration(sys, EnumerationMode::exhaustive_fp, b);
        const auto rev = hn_filtration(sys, EnumerationMode::exhaustive_fp, b, CandidateOrder::reversed);
        const std::string id = "instance " + std::to_string(trial);
        ties += hn.ties;
        steps += static_cast<long>(hn.slopes.size());
        t.expect(hn.chain == rev.chain && hn.slopes == rev.slopes, id + ": reversed order changes the filtration");
        t.expect(hn.chain.front().dim() == 0 && hn.chain.back().dim() == r, id + ": chain does not run 0 to E");
        for (std::size_t i = 1; i < hn.slopes.size(); ++i) {
            t.expect(hn.slopes[i] < hn.slopes[i - 1], id + ": slopes not strictly decreasing");
        }
        for (std::size_t i = 1; i < hn.chain.size(); ++i) {
            const auto piece = subquotient(sys, hn.chain[i - 1], hn.chain[i]);
            t.expect(pmu(piece.space) == hn.slopes[i - 1], id + ": reported slope differs from the subquotient");
            t.expect(classify_stability(piece, EnumerationMode::exhaustive_fp, b).verdict != Verdict::unstable,
                     id + ": unstable HN subquotient");
        }
    }
    return t.outcome(std::to_string(instances) + " systems over F_3/F_5, r<=4, " + std::to_string(steps) +
                     " HN factors, tie-broken steps " + std::to_string(ties));
}

// ---- 2. GIT equivalence ----

// Row-space representatives of every quotient map F_2^{nm} -> F_2^p.
std::vector<Matrix<PrimeField>> phi_orbits(const PrimeField& f, std::size_t cols) {
    Budget b;
    std::vector<Matrix<PrimeField>> out;
    for (const auto& s : enumerate_all_subspaces(f, cols, b)) out.push_back(s.basis());
    return out;
}

Outcome git_equivalence() {
    PrimeField f(2);
    Tally t;
    long configs = 0, stable = 0, semistable = 0, unstable = 0;
    auto check = [&](const GrassConfig<PrimeField>& cfg) {
        Budget b;
        const auto crit = classify_git(cfg, b);
        const auto hm = verify_hilbert_mumford(cfg, b);
        ++configs;
        if (crit.verdict == GitVerdict::stable) ++stable;
        else if (crit.verdict == GitVerdict::strictly_semistable) ++semistable;
        else ++unstable;
        // Independent sign reading of min mu.
        const int sign = hm.min_mu ? cmp(*hm.min_mu, Rational(0)) : 1;
        const auto expected = sign > 0 ? GitVerdict::stable : sign == 0 ? GitVerdict::strictly_semistable
                                                                        : GitVerdict::unstable;
        t.expect(crit.verdict == expected && hm.semistable_agrees && hm.stable_agrees,
                 "config #" + std::to_string(configs) + " (n=" + std::to_string(cfg.n) + ")");
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Matrix<PrimeField>>> orbits;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t m = 1; m <= 2; ++m) orbits[{n, m}] = phi_orbits(f, n * m);
    }
    // One factor: every orbit.
    for (const auto& [key, phis] : orbits) {
        for (const auto& phi : phis) check({f, key.first, {{key.second, phi, Rational(1)}}});
    }
    // Two factors: every ordered pair for n <= 2 with two weightings, seeded sample for n = 3.
    const std::vector<std::pair<Rational, Rational>> eps{{1, 1}, {1, 2}};
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m1 = 1; m1 <= 2; ++m1) {
            for (std::size_t m2 = m1; m2 <= 2; ++m2) {
                for (const auto& p1 : orbits[{n, m1}]) {
                    for (const auto& p2 : orbits[{n, m2}]) {
                        for (const auto& [e1, e2] : eps) check({f, n, {{m1, p1, e1}, {m2, p2, e2}}});
                    }
                }
            }
        }
    }
    Rng rng(2002);
    for (int k = 0; k < 300; ++k) {
        const std::size_t m1 = uniform(rng, 1, 2), m2 = uniform(rng, 1, 2);
        const auto& o1 = orbits[{3, m1}];
        const auto& o2 = orbits[{3, m2}];
        const auto& [e1, e2] = eps[uniform(rng, 0, 1)];
        check({f, 3, {{m1, o1[uniform(rng, 0, o1.size() - 1)], e1}, {m2, o2[uniform(rng, 0, o2.size() - 1)], e2}}});
    }
    return t.outcome(std::to_string(configs) + " configs over F_2 (n<=3, m<=2, <=2 factors): " +
                     std::to_string(stable) + " stable, " + std::to_string(semistable) + " strictly semistable, " +
                     std::to_string(unstable) + " unstable");
}

// ---- 3-5. slope laws and the gap ----

std::vector<Rational> gaps_3;  // strict differences from criterion 3, with their delta
std::vector<Rational> deltas_3;
std::vector<Rational> gaps_4;
std::vector<Rational> deltas_4;

// (d + sum_x sum_i alpha_i m_i) / r from jumps, written independently of the library.
Rational slope_oracle(const ParabolicNumerics& p) {
    Rational total = p.degree;
    for (std::size_t x = 0; x < p.weights.size(); ++x) {
        const auto& dims = p.flag_dims[x];
        for (std::size_t i = 0; i + 1 < dims.size(); ++i) total += p.weights[x].alpha[i] * (dims[i] - dims[i + 1]);
    }
    return total / p.rank;
}

Outcome direct_sum_law() {
    PrimeField f(2);
    Rng rng(3003);
    Tally t;
    int pairs = 0;
    for (std::size_t r1 = 1; r1 <= 3; ++r1) {
        for (std::size_t r2 = r1; r2 <= 3; ++r2) {
            const int per_shape = r1 + r2 <= 4 ? 24 : 12;
            for (int k = 0; k < per_shape; ++k) {
                const auto w = random_weights(rng, 1, std::min(r1, r2), 4);
                // Summands of degree 0: the sub-object convention assigns degree 0 to
                // 0 ⊕ E_2, which is only faithful when E_2 itself has degree 0.
                const long degree = 0;
                const auto e1 = random_space(f, r1, w, rng, degree);
                const auto e2 = random_space(f, r2, w, rng, degree);
                auto sum = direct_sum(e1, e2);
                Budget b;
                const auto m1 = min_quotient_slope(e1, b).slope;
                const auto m2 = min_quotient_slope(e2, b).slope;
                const auto all = quotient_slopes(sum, b);
                Rational lo = all.front().slope;
                for (const auto& q : all) lo = std::min(lo, q.slope);
                ++pairs;
                t.expect(lo == std::min(m1, m2), "pair " + std::to_string(pairs));
                const auto delta = delta_gap(static_cast<long>(r1 + r2), w);
                for (const auto& q : all) {
                    if (q.slope != lo) {
                        gaps_3.push_back(q.slope - lo);
                        deltas_3.push_back(delta);
                    }
                }
                if (m1 != m2) {
                    gaps_3.push_back(m1 > m2 ? m1 - m2 : m2 - m1);
                    deltas_3.push_back(delta_gap(static_cast<long>(std::max(r1, r2)), w));
                }
            }
        }
    }
    return t.outcome(std::to_string(pairs) + " pairs over F_2, summand ranks <=3, one puncture, denominators <=4");
}

Outcome gieseker_vs_slope() {
    Rng rng(4004);
    Tally t;
    int less = 0, equal = 0, greater = 0;
    const int pairs = 1000;
    auto random_numerics = [&](const WeightSystem& w, long genus) {
        ParabolicNumerics p;
        std::size_t longest = 1;
        for (std::size_t x = 0; x < w.size(); ++x) longest = std::max(longest, w.length(x));
        p.rank = static_cast<long>(uniform(rng, longest, 4));
        p.degree = static_cast<long>(uniform(rng, 0, 8)) - 4;
        p.genus = genus;
        p.weights = w;
        for (std::size_t x = 0; x < w.size(); ++x) {
            const auto dims = random_flag_dims(rng, static_cast<std::size_t>(p.rank), w.length(x));
            p.flag_dims.emplace_back(dims.begin(), dims.end());
        }
        validate(p);
        return p;
    };
    for (int k = 0; k < pairs; ++k) {
        const auto w = random_weights(rng, uniform(rng, 1, 2), 2, 4);
        const long genus = static_cast<long>(uniform(rng, 0, 2));
        const auto pf = random_numerics(w, genus);
        const auto pe = random_numerics(w, genus);
        const auto sf = slope_oracle(pf), se = slope_oracle(pe);
        const auto order = gieseker_leq(pf, pe);
        const auto expected = sf < se ? GiesekerOrder::precedes_strictly
                                      : sf == se ? GiesekerOrder::precedes_eq : GiesekerOrder::exceeds;
        t.expect(order == expected && pmu(pf) == sf && pmu(pe) == se, "pair " + std::to_string(k));
        if (sf < se) ++less;
        else if (sf == se) ++equal;
        else ++greater;
        if (sf != se) {
            gaps_4.push_back(sf < se ? se - sf : sf - se);
            deltas_4.push_back(delta_gap(std::max(pf.rank, pe.rank), w));
        }
    }
    return t.outcome(std::to_string(pairs) + " pairs: " + std::to_string(less) + " <, " + std::to_string(equal) +
                     " =, " + std::to_string(greater) + " >");
}

Outcome gap_property() {
    Tally t;
    Rational tightest = -1;
    auto scan = [&](const std::vector<Rational>& gaps, const std::vector<Rational>& deltas, const char* source) {
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            t.expect(gaps[i] > 0 && gaps[i] >= deltas[i], std::string(source) + " gap " + to_string(gaps[i]) +
                                                              " below delta " + to_string(deltas[i]));
            const Rational ratio = gaps[i] / deltas[i];
            if (tightest < 0 || ratio < tightest) tightest = ratio;
        }
    };
    scan(gaps_3, deltas_3, "direct-sum");
    scan(gaps_4, deltas_4, "gieseker");
    if (t.checks == 0) return {false, "no strict inequalities collected (criteria 3-4 did not run)"};
    return t.outcome(std::to_string(gaps_3.size() + gaps_4.size()) +
                     " strict inequalities, smallest gap/delta = " + to_string(tightest));
}

// ---- 6. residual interpolation ----

// A(E_i) inside E_{i+1} for every step, by rank counting on stacked rows.
bool maps_flag_down(const Matrix<Rationals>& a, const std::vector<Subspace<Rationals>>& flag) {
    for (std::size_t i = 0; i + 1 < flag.size(); ++i) {
        if (flag[i].dim() == 0) continue;
        auto images = (a * flag[i].basis().transpose()).transpose();
        Matrix<Rationals> stacked = flag[i + 1].basis();
        for (std::size_t k = 0; k < images.rows(); ++k) stacked.append_row(images.row(k));
        if (rank(stacked) != flag[i + 1].dim()) return false;
    }
    return true;
}

Outcome residual_interpolation() {
    Rationals k;
    Rng rng(6006);
    Tally t;
    int limit_passes = 0, higgs_pass = 0;
    const int connections = 100;
    for (int trial = 0; trial < connections; ++trial) {
        const std::size_t r = uniform(rng, 2, 3);
        const auto sys = random_valid_connection(k, r, uniform(rng, 1, 2), Rational(1), rng);
        const std::string id = "connection " + std::to_string(trial);
        const auto rep = validate_lambda_connection(sys);
        t.expect(rep.local_conditions_hold(), id + ": local conditions fail");
        Budget b;
        const auto base = classify_stability(sys, EnumerationMode::burnside, b);
        for (int j = 0; j < 10; ++j) {
            Rational mu = 0;
            while (mu == 0) mu = random_small_rational(rng, 5, 4);
            const auto scaled = scale_action(sys, mu);
            const auto srep = validate_lambda_connection(scaled);
            bool same = srep.local_conditions_hold() == rep.local_conditions_hold();
            for (std::size_t x = 0; x < rep.punctures.size(); ++x) {
                same = same && srep.punctures[x].flag_preserved == rep.punctures[x].flag_preserved &&
                       srep.punctures[x].residual == rep.punctures[x].residual &&
                       srep.punctures[x].trace == rep.punctures[x].trace;
            }
            const auto c = classify_stability(scaled, EnumerationMode::burnside, b);
            same = same && c.verdict == base.verdict && c.complete == base.complete &&
                   c.witness.has_value() == base.witness.has_value() &&
                   (!c.witness || c.witness->subspace == base.witness->subspace);
            t.expect(same, id + ": scaling by " + to_string(mu) + " changes a verdict");
        }
        // lambda -> 0 limit: nilpotent parts against the flags.
        const auto limit = higgs_limit_check(sys);
        t.expect(limit.split, id + ": spectrum not rational");
        for (std::size_t x = 0; x < sys.residues.size(); ++x) {
            const auto n = nilpotent_part(sys.residues[x]);
            if (!n) continue;
            auto power = Matrix<Rationals>::identity(k, r);
            for (std::size_t e = 0; e < r; ++e) power = power * *n;
            t.expect(power.is_zero(), id + ": nilpotent part is not nilpotent");
            t.expect(limit.strongly_parabolic[x] == maps_flag_down(*n, sys.space.flags[x]),
                     id + ": limit check disagrees with the flag oracle");
        }
        limit_passes += limit.passes();
        // A lambda = 0 Higgs system with unconstrained residues.
        auto higgs = random_system(k, r, 1, rng);
        higgs.lambda = 0;
        const bool strong = maps_flag_down(higgs.residues[0], higgs.space.flags[0]);
        higgs_pass += strong;
        t.expect(validate_lambda_connection(higgs).punctures[0].residual == strong,
                 id + ": lambda = 0 residual check disagrees with the flag oracle");
    }
    return t.outcome(std::to_string(connections) + " lambda=1 connections x 10 mu; Higgs limit strongly parabolic in " +
                     std::to_string(limit_passes) + "; lambda=0 oracle agreement on " + std::to_string(connections) +
                     " Higgs fields (" + std::to_string(higgs_pass) + " strongly parabolic)");
}

// ---- 7. bimodule algebra ----

PolyFn random_poly(Rng& rng) {
    std::vector<Rational> c(uniform(rng, 0, 6));
    for (auto& x : c) x = random_small_rational(rng, 4, 3);
    return PolyFn(std::move(c));
}

Outcome bimodule_algebra() {
    Rng rng(7007);
    Tally t;
    const int trials = 500;
    for (int k = 0; k < trials; ++k) {
        const Rational lambda = random_small_rational(rng);
        const std::size_t r = uniform(rng, 1, 3);
        PolySection s{{}, random_matrix(Rationals{}, r, r, rng), lambda};
        for (std::size_t i = 0; i < r; ++i) s.entries.push_back(random_poly(rng));
        const auto op = LogDiffOperator::first_order(random_poly(rng), random_poly(rng));
        t.expect(associativity_check(op, random_poly(rng), s, lambda), "trial " + std::to_string(k));
    }
    const auto one = LogDiffOperator::first_order(PolyFn::constant(1), {});
    int filtrations = 0;
    for (int k = 0; k < 20; ++k) {
        const Rational lambda = k == 0 ? Rational(1) : random_small_rational(rng);
        const auto d = LogDiffOperator::first_order(random_poly(rng), PolyFn::constant(random_small_rational(rng) + 5));
        const auto rep = filtration_check({one, d}, lambda);
        ++filtrations;
        t.expect(rep.orders_ok && rep.symbols_multiply && rep.surjective,
                 "filtration check " + std::to_string(k) + " (lambda " + to_string(lambda) + ")");
    }
    return t.outcome(std::to_string(trials) + " associativity checks (deg<=5, r<=3); order-2 symbol surjectivity on " +
                     std::to_string(filtrations) + " generating sets");
}

// ---- 8. fine-moduli certificates ----

Outcome fine_certificates() {
    Rng rng(8008);
    Tally t;
    int fine = 0, coarse = 0;
    auto certify = [&](const FineInput& in, const std::string& id) {
        const auto cert = bezout_certificate(in);
        long value = 0;
        for (const auto& term : cert.terms) value += term.a * chi(in, term.kappa, term.h);
        t.expect(value == 1 && cert.value == 1, id + ": certificate evaluates to " + std::to_string(value));
        ++fine;
    };
    for (long r = 1; r <= 5; ++r) {
        for (long d = -20; d <= 20; ++d) {
            const FineInput in{d, r, (d + 20) % 3, {std::vector<long>(static_cast<std::size_t>(r), 1)}};
            certify(in, "full flag r=" + std::to_string(r) + " d=" + std::to_string(d));
        }
    }
    auto random_input = [&](long scale) {
        FineInput in;
        in.r = scale * static_cast<long>(uniform(rng, 1, 4));
        in.d = scale * (static_cast<long>(uniform(rng, 0, 40)) - 20);
        in.g = static_cast<long>(uniform(rng, 0, 3));
        for (std::size_t x = 0, count = uniform(rng, 0, 3); x < count; ++x) {
            std::vector<long> m;
            for (long left = in.r / scale; left > 0;) {
                const long part = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(left)));
                m.push_back(scale * part);
                left -= part;
            }
            in.jumps.push_back(std::move(m));
        }
        return in;
    };
    for (int found = 0; found < 100;) {
        const auto in = random_input(1);
        if (!is_fine(in)) continue;
        certify(in, "random fine input " + std::to_string(found++));
    }
    for (int k = 0; k < 50; ++k) {
        const auto in = random_input(static_cast<long>(uniform(rng, 2, 4)));
        bool refused = false;
        try {
            bezout_certificate(in);
        } catch (const NotFineError& e) {
            refused = e.gcd() > 1;
        }
        t.expect(!is_fine(in) && refused, "non-fine input " + std::to_string(k));
        ++coarse;
    }
    return t.outcome(std::to_string(fine) + " certificates (205 full-flag r<=5, |d|<=20) re-evaluated to 1; " +
                     std::to_string(coarse) + " gcd>1 inputs refused");
}

// ---- 9. determinism ----

std::string job_kind(const std::string& text) { return nlohmann::json::parse(text).at("kind").get<std::string>(); }

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_determinism() {
    namespace fs = std::filesystem;
    Tally t;
    const fs::path scratch = fs::temp_directory_path() / ("parastab-acceptance-" + std::to_string(getpid()));
    fs::create_directories(scratch);
    std::set<std::string> kinds;
    int jobs = 0;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(PARASTAB_JOBS_DIR)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& job : files) {
        const auto text = read_file(job);
        const std::string kind = job_kind(text);
        std::string outputs[2];
        int status[2] = {0, 0};
        for (int run = 0; run < 2; ++run) {
            const auto out = scratch / (job.stem().string() + "." + std::to_string(run) + ".json");
            const std::string cmd = std::string("\"") + PARASTAB_CLI + "\" \"" +
                                    kind + "\" --in \"" + job.string() + "\" --out \"" + out.string() +
                                    "\" 2>/dev/null";
            status[run] = std::system(cmd.c_str());
            outputs[run] = read_file(out);
        }
        kinds.insert(kind);
        ++jobs;
        t.expect(!outputs[0].empty() && outputs[0] == outputs[1] && status[0] == status[1], job.filename().string() + ": reports differ");
        const auto a = cli::run_job(text, {});
        const auto b = cli::run_job(text, {});
        t.expect(a.report == b.report && a.exit_code == b.exit_code && a.report == outputs[0],
                 job.filename().string() + ": in-process report differs");
    }
    fs::remove_all(scratch);
    return t.outcome(std::to_string(jobs) + " job files covering " + std::to_string(kinds.size()) +
                     " job kinds, each run twice through the binary and in process");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"HN suite", hn_suite},
        {"GIT equivalence", git_equivalence},
        {"direct-sum slope law", direct_sum_law},
        {"Gieseker vs slope", gieseker_vs_slope},
        {"gap property", gap_property},
        {"residual interpolation", residual_interpolation},
        {"bimodule algebra", bimodule_algebra},
        {"fine-moduli certificates", fine_certificates},
        {"CLI determinism", cli_determinism},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("[%s] criterion %zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
