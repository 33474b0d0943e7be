#include "parastab/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parastab/errors.hpp"
#include "parastab/fine_moduli.hpp"
#include "parastab/fuchsian.hpp"
#include "parastab/git_grass.hpp"
#include "parastab/logops.hpp"

namespace parastab::cli {

namespace {

using json = nlohmann::json;

// Read-only view of a document node that knows its JSON pointer.
class Node {
public:
    Node(const json& j, std::string pointer) : j_(&j), ptr_(std::move(pointer)) {}

    const std::string& pointer() const { return ptr_; }

    [[noreturn]] void fail(const std::string& message) const { throw ValidationError(message, ptr_); }

    void allow_keys(std::initializer_list<std::string_view> keys) const {
        if (!j_->is_object()) fail("expected an object");
        for (const auto& [key, value] : j_->items()) {
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                throw ValidationError("unknown field '" + key + "'", ptr_ + "/" + key);
            }
        }
    }

    std::optional<Node> find(const std::string& key) const {
        if (!j_->is_object()) fail("expected an object");
        const auto it = j_->find(key);
        if (it == j_->end()) return std::nullopt;
        return Node(*it, ptr_ + "/" + key);
    }

    Node at(const std::string& key) const {
        auto n = find(key);
        if (!n) fail("missing field '" + key + "'");
        return *n;
    }

    std::vector<Node> items() const {
        if (!j_->is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], ptr_ + "/" + std::to_string(i));
        return out;
    }

    long integer() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        return j_->get<long>();
    }

    std::size_t count() const {
        const long v = integer();
        if (v < 0) fail("expected a non-negative integer");
        return static_cast<std::size_t>(v);
    }

    bool boolean() const {
        if (!j_->is_boolean()) fail("expected true or false");
        return j_->get<bool>();
    }

    std::string string() const {
        if (!j_->is_string()) fail("expected a string");
        return j_->get<std::string>();
    }

    Rational rational() const {
        try {
            return parse_rational(string());
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }

    template <class K>
    typename K::value_type element(const K& field) const {
        try {
            return field.parse(string());
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }

private:
    const json* j_;
    std::string ptr_;
};

// Re-raises library validation errors with the document location prepended.
template <class F>
auto located(const std::string& prefix, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError& e) {
        throw ValidationError(e.what(), prefix + e.pointer());
    } catch (const DimensionError& e) {
        throw ValidationError(e.what(), prefix);
    }
}

std::string rat(const Rational& q) { return to_string(q); }

template <class K>
Matrix<K> parse_matrix(const Node& n, const K& field, std::size_t rows, std::size_t cols) {
    const auto row_nodes = n.items();
    if (row_nodes.size() != rows) n.fail("expected " + std::to_string(rows) + " rows");
    Matrix<K> m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto entries = row_nodes[i].items();
        if (entries.size() != cols) row_nodes[i].fail("expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entries[j].element(field);
    }
    return m;
}

template <class K>
Subspace<K> parse_subspace(const Node& n, const K& field, std::size_t ambient) {
    const auto rows = n.items();
    Matrix<K> gens(field, 0, ambient);
    for (const auto& row : rows) {
        const auto entries = row.items();
        if (entries.size() != ambient) row.fail("expected " + std::to_string(ambient) + " entries");
        typename Matrix<K>::Vector v;
        for (const auto& e : entries) v.push_back(e.element(field));
        gens.append_row(v);
    }
    return Subspace<K>::span(gens);
}

template <class K>
std::vector<Subspace<K>> parse_subspace_list(const std::optional<Node>& n, const K& field, std::size_t ambient) {
    std::vector<Subspace<K>> out;
    if (!n) return out;
    for (const auto& item : n->items()) out.push_back(parse_subspace(item, field, ambient));
    return out;
}

template <class K>
json subspace_json(const Subspace<K>& w) {
    json rows = json::array();
    for (std::size_t i = 0; i < w.dim(); ++i) {
        json row = json::array();
        for (const auto& x : w.basis().row(i)) row.push_back(w.field().format(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
json matrix_json(const Matrix<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (const auto& x : m.row(i)) row.push_back(m.field().format(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- field and mode selection ----

std::string field_spec(const Node& payload, const Options& opt) {
    if (opt.field) return *opt.field;
    if (auto f = payload.find("field")) return f->string();
    return "q";
}

template <class F>
json with_field(const std::string& spec, F&& f) {
    if (spec == "q") return f(Rationals{});
    if (spec.rfind("p=", 0) == 0) {
        unsigned p = 0;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(spec.substr(2), &used);
            if (used != spec.size() - 2 || v > PrimeField::kMaxPrime) throw std::out_of_range("p");
            p = static_cast<unsigned>(v);
        } catch (const std::logic_error&) {
            throw ValidationError("field must be q or p=<prime up to 31>, got '" + spec + "'", "/payload/field");
        }
        return f(located("/payload/field", [&] { return PrimeField(p); }));
    }
    throw ValidationError("field must be q or p=<prime up to 31>, got '" + spec + "'", "/payload/field");
}

template <class K>
EnumerationMode pick_mode(const Options& opt) {
    if (opt.mode) return located("", [&] { return parse_enumeration_mode(*opt.mode); });
    return K::is_prime_field ? EnumerationMode::exhaustive_fp : EnumerationMode::burnside;
}

// ---- Fuchsian systems ----

template <class K>
FuchsianLambdaSystem<K> parse_system(const Node& n, const K& field) {
    const std::size_t r = n.at("rank").count();
    if (r == 0) n.at("rank").fail("rank must be positive");
    const long degree = n.find("degree") ? n.at("degree").integer() : 0;
    const long genus = n.find("genus") ? n.at("genus").integer() : 0;
    const auto lambda = n.find("lambda") ? n.at("lambda").element(field) : field.zero();
    const auto punct = n.at("punctures");
    std::vector<PunctureWeights> weights;
    std::vector<std::vector<Subspace<K>>> interior;
    std::vector<Matrix<K>> residues;
    for (const auto& p : punct.items()) {
        p.allow_keys({"id", "weights", "flag", "residue"});
        PunctureWeights pw{p.find("id") ? p.at("id").string() : "x" + std::to_string(weights.size()), {}};
        for (const auto& a : p.at("weights").items()) pw.alpha.push_back(a.rational());
        std::vector<Subspace<K>> steps;
        if (auto flag = p.find("flag")) {
            for (const auto& step : flag->items()) steps.push_back(parse_subspace(step, field, r));
        }
        if (steps.size() + 1 != pw.alpha.size()) {
            p.fail("flag needs l - 1 = " + std::to_string(pw.alpha.size() - 1) + " interior steps for " +
                   std::to_string(pw.alpha.size()) + " weights");
        }
        residues.push_back(p.find("residue") ? parse_matrix(p.at("residue"), field, r, r) : Matrix<K>(field, r, r));
        weights.push_back(std::move(pw));
        interior.push_back(std::move(steps));
    }
    auto ws = located(n.pointer(), [&] { return WeightSystem(std::move(weights)); });
    auto space = located(punct.pointer(), [&] {
        return make_parabolic_space(field, r, degree, std::move(ws), interior, genus);
    });
    FuchsianLambdaSystem<K> sys{std::move(space), lambda, std::move(residues)};
    located(n.pointer(), [&] {
        validate_structure(sys);
        return 0;
    });
    return sys;
}

template <class K>
json residual_json(const ResidualReport& rep) {
    json punctures = json::array();
    for (const auto& c : rep.punctures) {
        punctures.push_back({{"id", c.id},
                             {"flag_preserved", c.flag_preserved},
                             {"residual", c.residual},
                             {"trace", c.trace},
                             {"trace_value", c.trace_value},
                             {"beta", rat(c.beta)}});
    }
    return {{"punctures", punctures},
            {"local_conditions_hold", rep.local_conditions_hold()},
            {"residue_sum_zero", rep.residue_sum_zero},
            {"fuchs_relation", rep.fuchs_relation},
            {"pdeg_zero", rep.pdeg_zero},
            {"beta_total", rat(rep.beta_total)},
            {"xi_degree", rat(rep.xi_degree)}};
}

template <class K>
json stability_json(const StabilityReport<K>& rep) {
    json out{{"verdict", to_string(rep.verdict)},
             {"slope", rat(rep.slope)},
             {"checked_mode", to_string(rep.checked_mode)},
             {"complete", rep.complete},
             {"scope", rep.complete ? "all invariant subspaces" : "relative to checked family"},
             {"witness", nullptr}};
    if (rep.witness) out["witness"] = {{"subspace", subspace_json(rep.witness->subspace)}, {"slope", rat(rep.witness->slope)}};
    return out;
}

template <class K>
json filtration_json(const Filtration<K>& f) {
    json chain = json::array();
    for (const auto& w : f.chain) chain.push_back(subspace_json(w));
    json slopes = json::array();
    for (const auto& s : f.slopes) slopes.push_back(rat(s));
    return {{"chain", chain}, {"slopes", slopes}};
}

json invariants_json(const std::vector<FactorInvariant>& inv) {
    json out = json::array();
    for (const auto& f : inv) {
        out.push_back({{"dim", f.dim}, {"slope", rat(f.slope)}, {"charpolys", f.charpolys}, {"flag_dims", f.flag_dims}});
    }
    return out;
}

template <class K>
json system_job(const std::string& kind, const Node& payload, const K& field, const Options& opt, Budget& budget) {
    if (kind == "jh") {
        payload.allow_keys({"field", "rank", "degree", "genus", "lambda", "punctures", "other"});
    } else if (kind == "interp") {
        payload.allow_keys({"field", "rank", "degree", "genus", "lambda", "punctures", "candidates", "mu"});
    } else {
        payload.allow_keys({"field", "rank", "degree", "genus", "lambda", "punctures", "candidates"});
    }
    const auto sys = parse_system(payload, field);
    const auto mode = pick_mode<K>(opt);
    const auto candidates = parse_subspace_list(payload.find("candidates"), field, sys.rank());
    json out{{"field", field.name()}, {"mode", to_string(mode)}, {"caveat", kDegreeZeroCaveat}};
    if (kind == "stability") {
        out["lambda_connection"] = residual_json<K>(validate_lambda_connection(sys));
        out.update(stability_json(classify_stability(sys, mode, budget, candidates)));
    } else if (kind == "hn") {
        const auto hn = hn_filtration(sys, mode, budget);
        out.update(filtration_json(hn));
        out["ties"] = hn.ties;
    } else if (kind == "jh") {
        out.update(filtration_json(jh_filtration(sys, mode, budget)));
        out["graded_invariants"] = invariants_json(graded_invariants(sys, mode, budget));
        if (auto other = payload.find("other")) {
            other->allow_keys({"rank", "degree", "genus", "lambda", "punctures"});
            const auto sys2 = parse_system(*other, field);
            out["s_equivalence"] = to_string(s_equivalent_weak(sys, sys2, mode, budget));
        }
    } else {  // interp
        std::vector<std::pair<std::string, typename K::value_type>> mus;
        if (auto list = payload.find("mu")) {
            for (const auto& m : list->items()) mus.emplace_back(m.string(), m.element(field));
        } else {
            mus.emplace_back("1", field.one());
        }
        json rows = json::array();
        std::optional<json> first;
        bool constant = true;
        for (std::size_t i = 0; i < mus.size(); ++i) {
            const auto scaled = located("/payload/mu/" + std::to_string(i), [&] {
                auto s = scale_action(sys, mus[i].second);
                return s;
            });
            json row{{"mu", mus[i].first}, {"lambda", field.format(scaled.lambda)}};
            row["lambda_connection"] = residual_json<K>(validate_lambda_connection(scaled));
            row.update(stability_json(classify_stability(scaled, mode, budget, candidates)));
            json fingerprint = row;
            fingerprint.erase("mu");
            fingerprint.erase("lambda");
            for (auto& p : fingerprint["lambda_connection"]["punctures"]) p.erase("trace_value");
            if (!first) first = fingerprint;
            constant = constant && fingerprint == *first;
            rows.push_back(std::move(row));
        }
        out["rows"] = rows;
        out["constant_across_mu"] = constant;
        const auto limit = higgs_limit_check(sys);
        out["higgs_limit"] = {{"split", limit.split},
                              {"strongly_parabolic", limit.strongly_parabolic},
                              {"passes", limit.passes()}};
    }
    return out;
}

// ---- Grassmannian configurations ----

template <class K>
GrassConfig<K> parse_config(const Node& payload, const K& field) {
    GrassConfig<K> cfg{field, payload.at("n").count(), {}};
    for (const auto& f : payload.at("factors").items()) {
        f.allow_keys({"m", "p", "phi", "epsilon"});
        const std::size_t m = f.at("m").count();
        const auto rows = f.at("phi").items();
        if (auto p = f.find("p"); p && p->count() != rows.size()) p->fail("p must equal the number of rows of phi");
        auto phi = parse_matrix(f.at("phi"), field, rows.size(), cfg.n * m);
        cfg.factors.push_back({m, std::move(phi), f.at("epsilon").rational()});
    }
    located("/payload", [&] {
        validate(cfg);
        return 0;
    });
    return cfg;
}

template <class K>
json ops_json(const OnePS<K>& ops) {
    return {{"basis", matrix_json(ops.basis)}, {"weights", ops.weights}};
}

template <class K>
json git_job(const Node& payload, const K& field, Budget& budget) {
    payload.allow_keys({"field", "n", "factors", "candidates", "hilbert_mumford"});
    const auto cfg = parse_config(payload, field);
    GitReport<K> rep;
    if constexpr (K::is_prime_field) {
        if (payload.find("candidates")) {
            rep = classify_git(cfg, parse_subspace_list(payload.find("candidates"), field, cfg.n));
        } else {
            rep = classify_git(cfg, budget);
        }
    } else {
        rep = classify_git(cfg, parse_subspace_list(payload.find("candidates"), field, cfg.n));
    }
    json out{{"field", field.name()},
             {"verdict", to_string(rep.verdict)},
             {"complete", rep.complete},
             {"witness", rep.witness ? subspace_json(*rep.witness) : json(nullptr)},
             {"min_margin", rep.min_margin ? json(rat(*rep.min_margin)) : json(nullptr)}};
    if constexpr (K::is_prime_field) {
        const bool hm = payload.find("hilbert_mumford") ? payload.at("hilbert_mumford").boolean() : true;
        if (hm) {
            const auto v = verify_hilbert_mumford(cfg, budget);
            out["hilbert_mumford"] = {{"min_mu", v.min_mu ? json(rat(*v.min_mu)) : json(nullptr)},
                                      {"minimiser", v.minimiser ? ops_json(*v.minimiser) : json(nullptr)},
                                      {"semistable_agrees", v.semistable_agrees},
                                      {"stable_agrees", v.stable_agrees},
                                      {"bases_checked", v.bases_checked}};
        }
    }
    return out;
}

template <class K>
json mu_job(const Node& payload, const K& field) {
    payload.allow_keys({"field", "n", "factors", "basis", "weights"});
    const auto cfg = parse_config(payload, field);
    OnePS<K> ops{payload.find("basis") ? parse_matrix(payload.at("basis"), field, cfg.n, cfg.n)
                                       : Matrix<K>::identity(field, cfg.n),
                 {}};
    for (const auto& w : payload.at("weights").items()) ops.weights.push_back(w.integer());
    located("/payload", [&] {
        validate(ops);
        return 0;
    });
    json factors = json::array();
    for (const auto& f : cfg.factors) {
        const auto ker = kernel(f.phi);
        factors.push_back({{"kernel", subspace_json(ker)}, {"mu", mu_factor(ker, f.m, ops)}, {"epsilon", rat(f.epsilon)}});
    }
    return {{"field", field.name()}, {"factors", factors}, {"mu_total", rat(mu_total(cfg, ops))}};
}

// ---- fine moduli ----

json fine_job(const Node& payload) {
    payload.allow_keys({"d", "r", "g", "jumps"});
    FineInput in;
    in.d = payload.at("d").integer();
    in.r = payload.at("r").integer();
    in.g = payload.find("g") ? payload.at("g").integer() : 0;
    if (auto jumps = payload.find("jumps")) {
        for (const auto& row : jumps->items()) {
            std::vector<long> m;
            for (const auto& x : row.items()) m.push_back(x.integer());
            in.jumps.push_back(std::move(m));
        }
    }
    located("/payload", [&] {
        validate(in);
        return 0;
    });
    json out{{"fine", is_fine(in)}, {"gcd", fine_gcd(in)}, {"certificate", nullptr}};
    if (is_fine(in)) {
        const auto cert = bezout_certificate(in);
        json terms = json::array();
        for (const auto& t : cert.terms) terms.push_back({{"a", t.a}, {"kappa", t.kappa}, {"h", t.h}});
        out["certificate"] = terms;
        out["value"] = cert.value;
    }
    return out;
}

// ---- logops demo ----

struct DemoRng {
    std::mt19937_64 engine;
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
    Rational small_rational() {
        Rational q(uniform(-4, 4), uniform(1, 3));
        q.canonicalize();
        return q;
    }
    PolyFn poly(long max_degree) {
        std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_degree + 1)));
        for (auto& x : c) x = small_rational();
        return PolyFn(std::move(c));
    }
};

json logops_job(const Node& payload) {
    payload.allow_keys({"seed", "trials", "max_degree", "max_rank"});
    const long seed = payload.find("seed") ? payload.at("seed").integer() : 1;
    const long trials = payload.find("trials") ? static_cast<long>(payload.at("trials").count()) : 100;
    const long max_degree = payload.find("max_degree") ? static_cast<long>(payload.at("max_degree").count()) : 5;
    const long max_rank = payload.find("max_rank") ? static_cast<long>(payload.at("max_rank").count()) : 3;
    if (max_rank < 1) payload.at("max_rank").fail("max_rank must be positive");
    DemoRng rng{std::mt19937_64(static_cast<std::uint64_t>(seed))};
    long assoc = 0, collapse = 0, factorization = 0, well_defined = 0;
    const PolyFn z({Rational(0), Rational(1)});
    for (long t = 0; t < trials; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, max_rank));
        Matrix<Rationals> a(Rationals{}, r, r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) a(i, j) = rng.small_rational();
        }
        PolySection s{{}, a, rng.small_rational()};
        for (std::size_t i = 0; i < r; ++i) s.entries.push_back(rng.poly(max_degree));
        const auto op = LogDiffOperator::first_order(rng.poly(max_degree), rng.poly(max_degree));
        const auto f = rng.poly(max_degree);
        assoc += associativity_check(op, f, s, s.lambda);
        collapse += right_product(op, f, 0) == left_product(f, op);
        const auto moved = LogDiffOperator::first_order(op.coeff(0) + z * rng.poly(max_degree),
                                                        op.coeff(1) + z * rng.poly(max_degree));
        const auto v = s.at_zero();
        factorization += total_residue(op, a, v) == total_residue(moved, a, v);
        bool vanishes = true;
        for (const auto& c : apply_op(op, s.times(z)).at_zero()) vanishes = vanishes && c == 0;
        well_defined += vanishes;
    }
    const auto unit = LogDiffOperator::first_order(PolyFn::constant(1), {});
    const auto d = LogDiffOperator::first_order({}, PolyFn::constant(1));
    const auto filt = filtration_check({unit, d}, 1);
    auto count = [&](long passed) { return json{{"trials", trials}, {"passed", passed}}; };
    return {{"seed", seed},
            {"associativity", count(assoc)},
            {"lambda_zero_collapse", count(collapse)},
            {"residue_factorization", count(factorization)},
            {"residue_well_defined", count(well_defined)},
            {"filtration",
             {{"generators", "1, z d/dz"},
              {"orders_ok", filt.orders_ok},
              {"symbols_multiply", filt.symbols_multiply},
              {"surjective", filt.surjective},
              {"minors_gcd", filt.minors_gcd.to_string()}}}};
}

json dispatch(const std::string& kind, const Node& payload, const Options& opt, Budget& budget) {
    if (kind == "fine") return fine_job(payload);
    if (kind == "logops-demo") return logops_job(payload);
    const std::string spec = field_spec(payload, opt);
    if (kind == "stability" || kind == "hn" || kind == "jh" || kind == "interp") {
        return with_field(spec, [&](const auto& field) { return system_job(kind, payload, field, opt, budget); });
    }
    if (kind == "git") return with_field(spec, [&](const auto& field) { return git_job(payload, field, budget); });
    if (kind == "mu") return with_field(spec, [&](const auto& field) { return mu_job(payload, field); });
    throw ValidationError("unknown job kind '" + kind + "'", "/kind");
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

JobResult error_result(int code, const std::string& kind, const std::string& type, const std::string& message,
                       const std::string& pointer = {}) {
    json err{{"type", type}, {"message", message}};
    if (!pointer.empty()) err["pointer"] = pointer;
    return {code, render({{"version", kJobVersion}, {"kind", kind}, {"error", err}})};
}

}  // namespace

JobResult run_job(const std::string& job_text, const Options& options) {
    std::string kind = options.kind;
    try {
        json doc;
        try {
            doc = json::parse(job_text);
        } catch (const json::parse_error& e) {
            return error_result(schema_error, kind, "schema", std::string("malformed JSON: ") + e.what());
        }
        const Node root(doc, "");
        root.allow_keys({"version", "kind", "payload"});
        if (root.at("version").string() != kJobVersion) {
            root.at("version").fail(std::string("unsupported version, expected ") + kJobVersion);
        }
        const std::string file_kind = root.at("kind").string();
        if (!kind.empty() && file_kind != kind) root.at("kind").fail("job file is a '" + file_kind + "' job, not '" + kind + "'");
        kind = file_kind;
        Budget budget = options.budget ? Budget(*options.budget) : Budget::from_env();
        json report = dispatch(kind, root.at("payload"), options, budget);
        report["version"] = kJobVersion;
        report["kind"] = kind;
        return {ok, render(report)};
    } catch (const ValidationError& e) {
        return error_result(schema_error, kind, "schema", e.what(), e.pointer());
    } catch (const DimensionError& e) {
        return error_result(schema_error, kind, "schema", e.what());
    } catch (const BudgetExceeded& e) {
        return error_result(budget_exceeded, kind, "budget", e.what());
    } catch (const PreconditionError& e) {
        return error_result(precondition_violated, kind, "precondition", e.what());
    } catch (const std::exception& e) {
        return error_result(precondition_violated, kind, "internal", e.what());
    }
}

int main(int argc, char** argv) {
    CLI::App app{"Exact parabolic stability computations from JSON job files"};
    Options opt;
    std::string in_path, out_path, mode;
    std::uint64_t budget = 0;
    std::string field;
    app.add_option("kind", opt.kind, "stability | hn | jh | git | mu | fine | interp | logops-demo")->required();
    app.add_option("--in", in_path, "job file")->required();
    app.add_option("--out", out_path, "report file (default: stdout)");
    auto* budget_opt = app.add_option("--budget", budget, "enumeration budget (visits)");
    auto* field_opt = app.add_option("--field", field, "q or p=<prime>");
    auto* mode_opt = app.add_option("--mode", mode, "exhaustive | burnside | candidates");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : schema_error;
    }
    if (*budget_opt) opt.budget = budget;
    if (*field_opt) opt.field = field;
    if (*mode_opt) opt.mode = mode;

    std::ifstream in(in_path, std::ios::binary);
    JobResult result;
    if (!in) {
        result = error_result(schema_error, opt.kind, "io", "cannot read " + in_path);
    } else {
        std::ostringstream text;
        text << in.rdbuf();
        result = run_job(text.str(), opt);
    }
    if (out_path.empty()) {
        std::cout << result.report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << result.report;
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return schema_error;
        }
    }
    if (result.exit_code != ok) std::cerr << "parastab: " << opt.kind << " job failed (exit " << result.exit_code << ")\n";
    return result.exit_code;
}

}  // namespace parastab::cli
