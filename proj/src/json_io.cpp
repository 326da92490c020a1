#include "orbivertex/json_io.hpp"

namespace orbivertex {

json to_json(const Partition& p) {
    json out = json::array();
    for (long v : p.parts) out.push_back(v);
    return out;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) fail(errc::invalid_input, "partition JSON must be an array");
    std::vector<long> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(errc::invalid_input, "partition parts must be integers");
        parts.push_back(v.get<long>());
    }
    return Partition(std::move(parts));
}

json to_json(const MultiPartition& m) {
    json out = json::array();
    for (const auto& c : m.components) out.push_back(to_json(c));
    return out;
}

MultiPartition multipartition_from_json(const json& j, long modulus) {
    if (!j.is_array()) fail(errc::invalid_input, "multipartition JSON must be an array");
    std::vector<Partition> comps;
    for (const auto& c : j) comps.push_back(partition_from_json(c));
    while ((long)comps.size() < modulus) comps.push_back(Partition{});
    return MultiPartition(modulus, std::move(comps));
}

json to_json(const ColoredDiagram& d) {
    return json{{"n", d.modulus}, {"shape", to_json(d.shape)}};
}

json to_json(const Cyclo& c) {
    json coords = json::array();
    for (const auto& x : c.coords()) coords.push_back(rat_to_string(x));
    return json{{"order", c.order()}, {"coords", coords}};
}

Cyclo cyclo_from_json(const json& j) {
    if (j.is_string()) {
        return Cyclo(rat_from_string(j.get<std::string>()));
    }
    long order = j.at("order").get<long>();
    const auto& coords = j.at("coords");
    Cyclo out;
    long idx = 0;
    for (const auto& c : coords) {
        Cyclo term = Cyclo(rat_from_string(c.get<std::string>())) *
                     Cyclo::root_of_unity(order, idx);
        out += term;
        ++idx;
    }
    return out;
}

json to_json(const ExpMonomial& m) {
    json out = json::object();
    for (const auto& [v, e] : m.exps()) out[var_name(v)] = rat_to_string(e);
    return out;
}

ExpMonomial monomial_from_json(const json& j) {
    ExpMonomial out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out = out.times(ExpMonomial::var(var_from_name(it.key()), rat_from_string(it.value())));
    return out;
}

namespace {

const char* grading_name(int g) {
    switch (g) {
        case GRADE_Q: return "q";
        case GRADE_U: return "u";
        case GRADE_X: return "x";
        case GRADE_V: return "v";
    }
    return "?";
}

} // namespace

json to_json(const Window& w) {
    json out = json::object();
    for (int g = 0; g < kNumGradings; ++g) {
        json b = json::object();
        b["lo"] = rat_to_string(w.lo[g]);
        if (w.hi[g]) b["hi"] = rat_to_string(*w.hi[g]);
        out[grading_name(g)] = b;
    }
    return out;
}

json to_json(const PuiseuxSeries& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back(json{{"exp", to_json(m)}, {"coeff", to_json(c)}});
    return json{{"window", to_json(s.window())}, {"terms", terms}};
}

PuiseuxSeries series_from_json(const json& j) {
    PuiseuxSeries out;
    for (const auto& t : j.at("terms"))
        out.add_term(monomial_from_json(t.at("exp")), cyclo_from_json(t.at("coeff")));
    return out;
}

json to_json(const AffineForm& f) {
    json lin = json::object();
    for (const auto& [name, c] : f.linear) lin[name] = to_json(c);
    return json{{"pi_sqrt_minus_one", rat_to_string(f.pi_sqrt_minus_one_coeff)},
                {"linear", lin}};
}

} // namespace orbivertex
