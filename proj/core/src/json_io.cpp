#include <torisol/json_io.hpp>

#include <torisol/errors.hpp>

#include <json.hpp>

namespace torisol {

namespace {

using nlohmann::json;

json enc(const Int& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

Int dec(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw parse_error("not an integer: " + j.dump());
        }
    }
    throw parse_error("expected an integer or decimal string, got " + j.dump());
}

json enc_vec(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(enc(x));
    return a;
}

IntVector dec_vec(const json& j) {
    if (!j.is_array()) throw parse_error("expected an array of integers");
    IntVector v;
    for (const json& x : j) v.push_back(dec(x));
    return v;
}

json enc_vec2(const std::vector<std::vector<Int>>& rows) {
    json a = json::array();
    for (const auto& r : rows) a.push_back(enc_vec(r));
    return a;
}

std::vector<std::vector<Int>> dec_vec2(const json& j) {
    if (!j.is_array()) throw parse_error("expected an array of arrays");
    std::vector<std::vector<Int>> rows;
    for (const json& r : j) rows.push_back(dec_vec(r));
    return rows;
}

void check_version(const json& j) {
    if (!j.is_object()) throw parse_error("expected a JSON object");
    if (j.contains("schema_version") && dec(j.at("schema_version")) != 1)
        throw parse_error("unsupported schema_version");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

json trace_to_obj(const EuclidTrace& t) {
    return json{{"schema_version", 1},
                {"n", enc(t.n)},
                {"m", enc(t.m)},
                {"h", enc_vec(t.h)},
                {"r", enc_vec(t.r)}};
}

EuclidTrace trace_from_obj(const json& j) {
    check_version(j);
    EuclidTrace t;
    t.n = dec(j.at("n"));
    t.m = dec(j.at("m"));
    t.h = dec_vec(j.at("h"));
    t.r = dec_vec(j.at("r"));
    if (!t.valid()) throw parse_error("trace violates the successive-division invariants");
    return t;
}

BinomialKind kind_from_name(const std::string& name) {
    if (name == "pure_power_y") return BinomialKind::PurePowerY;
    if (name == "seed") return BinomialKind::Seed;
    if (name == "type1") return BinomialKind::Type1;
    if (name == "type2") return BinomialKind::Type2;
    throw parse_error("unknown entry kind: " + name);
}

json params_to_obj(const SurfaceParams& p) {
    return json{{"schema_version", 1}, {"lambda", enc(p.lambda)}, {"n", enc(p.n)}, {"m", enc(p.m)}};
}

SurfaceParams params_from_obj(const json& j) {
    check_version(j);
    SurfaceParams p;
    p.lambda = dec(j.at("lambda"));
    p.n = dec(j.at("n"));
    p.m = dec(j.at("m"));
    return p;
}

Verdict verdict_from_name(const std::string& name) {
    for (Verdict v : {Verdict::SurfaceCorank1, Verdict::SurfaceCorank2, Verdict::NormalForm2s,
                      Verdict::ContainsSq, Verdict::NotIsolatedOrNotSmoothNormalization,
                      Verdict::Indeterminate})
        if (verdict_name(v) == name) return v;
    throw parse_error("unknown verdict: " + name);
}

json pairs_to_obj(const std::vector<std::pair<Int, Int>>& pairs) {
    json a = json::array();
    for (const auto& [x, y] : pairs) a.push_back(json::array({enc(x), enc(y)}));
    return a;
}

std::vector<std::pair<Int, Int>> pairs_from_obj(const json& j) {
    std::vector<std::pair<Int, Int>> out;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2) throw parse_error("expected [a, b] pairs");
        out.emplace_back(dec(e[0]), dec(e[1]));
    }
    return out;
}

json sq_params_to_obj(const SqParams& p) {
    return json{{"schema_version", 1}, {"s", p.s},
                {"q", p.q},           {"powers", enc_vec2(p.powers)},
                {"lambda", enc_vec2(p.lambda)}, {"mu", enc_vec2(p.mu)}};
}

SqParams sq_params_from_obj(const json& j) {
    check_version(j);
    SqParams p;
    p.s = j.at("s").get<int>();
    p.q = j.at("q").get<int>();
    p.powers = dec_vec2(j.at("powers"));
    p.lambda = dec_vec2(j.at("lambda"));
    p.mu = dec_vec2(j.at("mu"));
    p.validate();
    return p;
}

}  // namespace

std::string to_json(const EuclidTrace& t, int indent) { return dump(trace_to_obj(t), indent); }

EuclidTrace trace_from_json(const std::string& text) { return trace_from_obj(parse(text)); }

std::string to_json(const GeneratorTable& table, int indent) {
    json entries = json::array();
    for (const GeneratorEntry& e : table.entries) {
        entries.push_back(json{{"kind", kind_name(e.kind)},
                               {"k", e.k},
                               {"j", e.j},
                               {"a", enc(e.a)},
                               {"b", enc(e.b)},
                               {"d", enc(e.d)},
                               {"plus", enc_vec(e.binomial.plus)},
                               {"minus", enc_vec(e.binomial.minus)}});
    }
    json j{{"schema_version", 1},
           {"lambda", enc(table.params.lambda)},
           {"n", enc(table.params.n)},
           {"m", enc(table.params.m)},
           {"trace", trace_to_obj(table.trace)},
           {"entries", entries}};
    return dump(j, indent);
}

GeneratorTable table_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    GeneratorTable table;
    table.params.lambda = dec(j.at("lambda"));
    table.params.n = dec(j.at("n"));
    table.params.m = dec(j.at("m"));
    table.trace = trace_from_obj(j.at("trace"));
    for (const json& je : j.at("entries")) {
        GeneratorEntry e;
        e.kind = kind_from_name(je.at("kind").get<std::string>());
        e.k = je.at("k").get<int>();
        e.j = je.at("j").get<int>();
        e.a = dec(je.at("a"));
        e.b = dec(je.at("b"));
        e.d = dec(je.at("d"));
        e.binomial = Binomial::from_exponents(dec_vec(je.at("plus")), dec_vec(je.at("minus")));
        table.entries.push_back(std::move(e));
    }
    return table;
}

std::string to_json(const ClassificationResult& r, int indent) {
    json j{{"schema_version", 1}, {"verdict", verdict_name(r.verdict)}};
    if (r.case1) {
        j["case1"] = json{{"lambda", enc(r.case1->lambda)},
                          {"powers", enc_vec(r.case1->powers)},
                          {"free_monomials", pairs_to_obj(r.case1->free_monomials)}};
    }
    if (r.case2) {
        j["case2"] = json{{"lambda", enc(r.case2->lambda)},
                          {"b1", enc(r.case2->b1)},
                          {"x_powers", enc_vec(r.case2->x_powers)},
                          {"y_powers", enc_vec(r.case2->y_powers)},
                          {"free_monomials", pairs_to_obj(r.case2->free_monomials)}};
    }
    if (r.two_s) {
        j["two_s"] = json{{"lambdas", enc_vec(r.two_s->lambdas)},
                          {"n", enc(r.two_s->n)},
                          {"m", enc(r.two_s->m)}};
    }
    if (r.sq) {
        json idx = json::array();
        for (std::size_t i : r.sq->generator_indices) idx.push_back(i);
        j["sq"] = json{{"params", sq_params_to_obj(r.sq->params)}, {"indices", idx}};
    }
    json ev = json::array();
    for (const EvidenceItem& e : r.evidence)
        ev.push_back(json{{"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
    j["evidence"] = ev;
    return dump(j, indent);
}

ClassificationResult classification_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    ClassificationResult r;
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (j.contains("case1")) {
        Case1Params c;
        c.lambda = dec(j["case1"].at("lambda"));
        c.powers = dec_vec(j["case1"].at("powers"));
        c.free_monomials = pairs_from_obj(j["case1"].at("free_monomials"));
        r.case1 = std::move(c);
    }
    if (j.contains("case2")) {
        Case2Params c;
        c.lambda = dec(j["case2"].at("lambda"));
        c.b1 = dec(j["case2"].at("b1"));
        c.x_powers = dec_vec(j["case2"].at("x_powers"));
        c.y_powers = dec_vec(j["case2"].at("y_powers"));
        c.free_monomials = pairs_from_obj(j["case2"].at("free_monomials"));
        r.case2 = std::move(c);
    }
    if (j.contains("two_s")) {
        TwoSParams c;
        c.lambdas = dec_vec(j["two_s"].at("lambdas"));
        c.n = dec(j["two_s"].at("n"));
        c.m = dec(j["two_s"].at("m"));
        r.two_s = std::move(c);
    }
    if (j.contains("sq")) {
        SqWitness w;
        w.params = sq_params_from_obj(j["sq"].at("params"));
        for (const json& i : j["sq"].at("indices")) w.generator_indices.push_back(i.get<std::size_t>());
        r.sq = std::move(w);
    }
    for (const json& e : j.at("evidence"))
        r.evidence.push_back({e.at("check").get<std::string>(), e.at("passed").get<bool>(),
                              e.at("detail").get<std::string>()});
    return r;
}

std::string to_json(const SemigroupSpec& spec, int indent) {
    json gens = json::array();
    for (const IntVector& g : spec.generators) gens.push_back(enc_vec(g));
    return dump(json{{"schema_version", 1}, {"s", spec.s}, {"generators", gens}}, indent);
}

SemigroupSpec semigroup_from_json(const std::string& text) {
    json j = parse(text);
    check_version(j);
    SemigroupSpec spec;
    if (!j.contains("s") || !j.contains("generators"))
        throw parse_error("semigroup document needs fields \"s\" and \"generators\"");
    spec.s = j.at("s").get<std::size_t>();
    for (const json& g : j.at("generators")) spec.generators.push_back(dec_vec(g));
    spec.validate();
    return spec;
}

std::string to_json(const SurfaceParams& params, int indent) {
    return dump(params_to_obj(params), indent);
}

SurfaceParams surface_params_from_json(const std::string& text) {
    return params_from_obj(parse(text));
}

std::string to_json(const SqParams& params, int indent) {
    return dump(sq_params_to_obj(params), indent);
}

SqParams sq_params_from_json(const std::string& text) { return sq_params_from_obj(parse(text)); }

std::string to_json(const VerificationReport& rep, const SurfaceParams& params, int indent) {
    json j{{"schema_version", 1},
           {"params", params_to_obj(params)},
           {"certificates_ok", rep.certificates_ok},
           {"c_sequence_ok", rep.c_sequence_ok},
           {"shifts_checked", rep.shifts_checked},
           {"shifts_ok", rep.shifts_ok},
           {"decompositions_checked", rep.decompositions_checked},
           {"decompositions_ok", rep.decompositions_ok},
           {"failures", rep.failures},
           {"ok", rep.ok()}};
    return dump(j, indent);
}

std::string to_json(const CrossCheckReport& rep, const MinimalityReport* probe, int indent) {
    json j{{"schema_version", 1},
           {"params", params_to_obj(rep.params)},
           {"bound", enc(rep.bound)},
           {"degree_cap", enc(rep.degree_cap)},
           {"capped", rep.capped},
           {"kernel_vectors", rep.kernel_vectors},
           {"inconclusive", rep.inconclusive},
           {"passed", rep.passed()}};
    json unre = json::array();
    for (const IntVector& v : rep.unreduced) unre.push_back(enc_vec(v));
    j["unreduced"] = unre;
    json missing = json::array();
    for (const IntVector& v : rep.missing_from_enumeration) missing.push_back(enc_vec(v));
    j["missing_from_enumeration"] = missing;
    if (probe) {
        json statuses = json::array();
        for (ProbeStatus s : probe->per_entry)
            statuses.push_back(s == ProbeStatus::Irredundant
                                   ? "irredundant"
                                   : s == ProbeStatus::Redundant ? "redundant" : "inconclusive");
        j["minimality"] = json{{"per_entry", statuses},
                               {"irredundant", probe->irredundant},
                               {"redundant", probe->redundant},
                               {"inconclusive", probe->inconclusive}};
    }
    return dump(j, indent);
}

}  // namespace torisol
