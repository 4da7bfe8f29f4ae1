#include "qcluster/io.hpp"

#include "qcluster/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace qcluster {

using nlohmann::json;

namespace {

const char* kind_name(SymbolKind k) {
    switch (k) {
    case SymbolKind::position:
        return "position";
    case SymbolKind::momentum:
        return "momentum";
    case SymbolKind::central_z:
        return "z";
    case SymbolKind::central_u:
        return "u";
    case SymbolKind::spectral:
        return "spectral";
    }
    return "";
}

SymbolKind parse_kind(const std::string& s) {
    if (s == "position") return SymbolKind::position;
    if (s == "momentum") return SymbolKind::momentum;
    if (s == "z") return SymbolKind::central_z;
    if (s == "u") return SymbolKind::central_u;
    if (s == "spectral") return SymbolKind::spectral;
    throw SchemaError("unknown symbol kind " + s);
}

json parse_doc(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T get_as(const json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw SchemaError(std::string("bad ") + what);
    }
}

std::string vertex_name(const std::vector<std::string>& names, std::size_t v) {
    return v < names.size() ? names[v] : std::to_string(v + 1);
}

}  // namespace

std::string seed_json(const Seed& s, const std::vector<std::string>& vertex_names) {
    json j;
    j["ambient_dim"] = s.ambient_dim;
    j["basis"] = s.basis;
    j["form2"] = s.form2;
    j["frozen"] = std::vector<int>(s.frozen.begin(), s.frozen.end());
    if (s.has_labels()) {
        const SymbolSpace& sp = *s.symbols;
        json syms = json::array();
        for (std::size_t i = 0; i < sp.size(); ++i)
            syms.push_back({{"name", sp.name(static_cast<int>(i))}, {"kind", kind_name(sp.kind(static_cast<int>(i)))}});
        j["symbols"] = syms;
        json amb = json::array();
        for (const auto& l : s.ambient_labels) amb.push_back(sp.render(l));
        j["ambient_labels"] = amb;
        json labels = json::array();
        for (std::size_t v = 0; v < s.size(); ++v) labels.push_back(sp.render(s.label(static_cast<int>(v))));
        j["labels"] = labels;
    }
    if (!vertex_names.empty()) j["vertex_names"] = vertex_names;
    return j.dump(2);
}

Seed parse_seed_json(const std::string& text) {
    const json j = parse_doc(text);
    if (!j.is_object()) throw SchemaError("seed must be an object");
    for (const char* key : {"ambient_dim", "basis", "form2"})
        if (!j.contains(key)) throw SchemaError(std::string("seed lacks ") + key);
    Seed s;
    s.ambient_dim = get_as<int>(j["ambient_dim"], "ambient_dim");
    s.basis = get_as<std::vector<LVec>>(j["basis"], "basis");
    s.form2 = get_as<IntMatrix>(j["form2"], "form2");
    if (j.contains("frozen"))
        for (int f : get_as<std::vector<int>>(j["frozen"], "frozen")) s.frozen.insert(f);

    const auto n = static_cast<std::size_t>(s.ambient_dim);
    if (s.form2.size() != n) throw SchemaError("form2 has the wrong size");
    for (std::size_t a = 0; a < n; ++a) {
        if (s.form2[a].size() != n) throw SchemaError("form2 has the wrong size");
        for (std::size_t b = 0; b < n; ++b)
            if (s.form2[a][b] != -s.form2[b][a]) throw SchemaError("form2 is not skew");
    }
    for (const auto& e : s.basis)
        if (e.size() != n) throw SchemaError("basis vector has the wrong length");
    for (int f : s.frozen)
        if (f < 0 || f >= static_cast<int>(s.size())) throw SchemaError("frozen index out of range");

    if (j.contains("symbols")) {
        auto sp = std::make_shared<SymbolSpace>();
        const json& syms = j["symbols"];
        for (std::size_t i = 0; i < syms.size(); ++i) {
            const auto name = get_as<std::string>(syms[i].at("name"), "symbol name");
            const SymbolKind k = parse_kind(get_as<std::string>(syms[i].at("kind"), "symbol kind"));
            if (k == SymbolKind::momentum) throw SchemaError("momentum symbol without a preceding position");
            if (k == SymbolKind::position) {
                if (i + 1 >= syms.size() || syms[i + 1].value("kind", "") != "momentum")
                    throw SchemaError("position symbol must be followed by its momentum");
                sp->add_pair(name, get_as<std::string>(syms[i + 1].at("name"), "symbol name"));
                ++i;
            } else {
                sp->add(name, k);
            }
        }
        if (!j.contains("ambient_labels")) throw SchemaError("symbols given without ambient_labels");
        for (const auto& l : j["ambient_labels"]) {
            try {
                s.ambient_labels.push_back(sp->parse(get_as<std::string>(l, "ambient label")));
            } catch (const SchemaError&) {
                throw;
            } catch (const std::exception& e) {
                throw SchemaError(std::string("bad ambient label: ") + e.what());
            }
        }
        if (s.ambient_labels.size() != n) throw SchemaError("ambient_labels has the wrong length");
        s.symbols = sp;
    }
    return s;
}

std::string seed_dot(const Seed& s, const std::vector<std::string>& vertex_names) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t v = 0; v < s.size(); ++v) {
        os << "  v" << v + 1 << " [label=\"" << vertex_name(vertex_names, v) << "\"";
        if (s.is_frozen(static_cast<int>(v))) os << ", shape=box";
        os << "];\n";
    }
    const HalfIntMatrix eps = exchange_matrix(s);
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
            const int t = eps.twice[a][b];
            if (t <= 0) continue;
            for (int k = 0; k < t / 2; ++k) os << "  v" << a + 1 << " -> v" << b + 1 << ";\n";
            if (t % 2) os << "  v" << a + 1 << " -> v" << b + 1 << " [style=dashed];\n";
        }
    os << "}\n";
    return os.str();
}

std::string element_json(const TorusElement& x) {
    json out = json::array();
    for (const auto& [l, c] : x.terms()) {
        json coeff = json::object();
        for (const auto& [e, a] : c.terms()) coeff[std::to_string(e)] = a.str();
        out.push_back({{"lattice_vector", l}, {"coeff", coeff}});
    }
    return out.dump();
}

TorusElement parse_element_json(const std::string& text, int ambient_dim) {
    const json j = parse_doc(text);
    if (!j.is_array()) throw SchemaError("element must be an array of terms");
    TorusElement out(ambient_dim);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("lattice_vector")) throw SchemaError("term needs lattice_vector");
        const auto l = get_as<LVec>(t["lattice_vector"], "lattice_vector");
        if (static_cast<int>(l.size()) != ambient_dim) throw SchemaError("lattice_vector has the wrong length");
        QCoeff c = 1;
        if (t.contains("coeff")) {
            const json& cj = t["coeff"];
            if (cj.is_number_integer()) {
                c = QCoeff(cj.get<long long>());
            } else if (cj.is_object()) {
                c = 0;
                for (const auto& [e, a] : cj.items()) {
                    try {
                        c += QCoeff::v_power(std::stoi(e), Int((a.is_string() ? a.get<std::string>() : a.dump()).c_str()));
                    } catch (const std::exception&) {
                        throw SchemaError("bad coefficient entry " + e);
                    }
                }
            } else {
                throw SchemaError("coeff must be an integer or an object");
            }
        }
        out.add_term(l, c);
    }
    return out;
}

std::string diffop_json(const DiffOp& op) {
    json out = json::array();
    for (const auto& [shift, c] : op.terms()) {
        json sh = json::object();
        for (const auto& [w, k] : shift) sh["D" + w.substr(1)] = k;
        out.push_back({{"coeff", c.str()}, {"shift", sh}});
    }
    return out.dump();
}

std::string report_json(const CheckReport& r) {
    json j{{"check_id", r.check}, {"inputs", r.inputs}, {"status", r.pass ? "PASS" : "FAIL"}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.lhs.empty()) j["lhs"] = r.lhs;
    if (!r.rhs.empty()) j["rhs"] = r.rhs;
    return j.dump();
}

}  // namespace qcluster
