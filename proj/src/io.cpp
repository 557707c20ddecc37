#include "preproj/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace preproj {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

template <class T>
T get(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string(what) + ": missing field \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string(what) + ": field \"" + key + "\": " + e.what());
    }
}

std::string vertex_label(int v, int base) {
    return v < base ? std::to_string(v + 1) : std::to_string(v - base + 1) + "'";
}

template <class Tag>
Json vec_json(const LatticeVec<Tag>& v) {
    return Json(v.coords());
}

Json word_json(const Word& w) {
    Json j = Json::array();
    for (int i : w) j.push_back(i + 1);
    return j;
}

template <ExactField F>
Json entry_json(const F& x) {
    if constexpr (std::is_same_v<F, Fp>) {
        return x.to_signed();
    } else {
        if (x.is_integer() && x.value().get_num().fits_slong_p()) return x.value().get_num().get_si();
        return x.to_string();
    }
}

// Integers or "p/q" strings of any size, parsed by GMP.
template <ExactField F>
F entry_from_json(const Json& e) {
    if (e.is_number_integer()) return F::from_int(e.get<std::int64_t>());
    if (!e.is_string()) throw FormatError("matrix entry must be an integer or a \"p/q\" string");
    const auto s = e.get<std::string>();
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw FormatError("matrix entry \"" + s + "\" is not an integer or fraction");
    q.canonicalize();
    if constexpr (std::is_same_v<F, Fp>) {
        const mpz_class p(static_cast<unsigned long>(Fp::modulus()));
        const mpz_class num = ((q.get_num() % p) + p) % p, den = q.get_den() % p;
        if (den == 0) throw FormatError("matrix entry \"" + s + "\" has a denominator divisible by the field prime");
        return Fp::from_int(static_cast<std::int64_t>(num.get_ui())) / Fp::from_int(static_cast<std::int64_t>(den.get_ui()));
    } else {
        return F(q);
    }
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::shared_ptr<const RootSystem> root_system_from_json(const Json& quiver) {
    try {
        if (quiver.is_string()) return build_root_system(quiver.get<std::string>());
        auto type = get<std::string>(quiver, "type", "quiver");
        if (quiver.contains("rank")) {
            const auto rank = quiver.at("rank").get<int>();
            if (type.size() > 1 && std::to_string(rank) != type.substr(1))
                throw FormatError("quiver: type " + type + " disagrees with rank " + std::to_string(rank));
            if (type.size() == 1) type += std::to_string(rank);
        }
        return build_root_system(type);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("quiver: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Quiver orientation_from_json(const RootSystem& rs, const Json& orientation) {
    if (orientation.is_null()) return rs.default_orientation();
    std::vector<Arrow> arrows;
    try {
        for (const auto& e : orientation) {
            const auto p = e.get<std::vector<int>>();
            if (p.size() != 2) throw FormatError("orientation: every arrow is a [src, dst] pair");
            arrows.push_back({p[0] - 1, p[1] - 1});
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("orientation: ") + e.what());
    }
    Quiver q(rs.rank(), std::move(arrows));
    if (!rs.is_orientation(q)) throw FormatError("orientation is not an orientation of the " + rs.name() + " diagram");
    return q;
}

Json orientation_to_json(const Quiver& q) {
    Json j = Json::array();
    for (const auto& a : q.arrows()) j.push_back({a.src + 1, a.dst + 1});
    return j;
}

Quiver parse_orientation(const RootSystem& rs, const std::string& text) {
    if (!text.empty() && text.front() == '[') return orientation_from_json(rs, parse_json(text));
    Json j = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw FormatError("orientation item \"" + item + "\" should look like 1-2");
        try {
            j.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
        } catch (const std::logic_error&) {
            throw FormatError("orientation item \"" + item + "\" should look like 1-2");
        }
    }
    return orientation_from_json(rs, j);
}

LoadedModuleHeader module_header(const Json& j) {
    LoadedModuleHeader h;
    const Json& quiver = j.contains("quiver") ? j.at("quiver") : throw FormatError("module: missing field \"quiver\"");
    h.rs = root_system_from_json(quiver);
    h.orientation = orientation_from_json(*h.rs, quiver.is_object() && quiver.contains("orientation") ? quiver.at("orientation")
                                                                                                        : Json());
    h.extended = quiver.is_object() && quiver.value("extended", false);
    h.field_prime = j.value("field_prime", std::uint64_t{0});
    return h;
}

template <ExactField F>
Json module_to_json(const RootSystem& rs, const PiModule<F>& m) {
    const auto& q = m.quiver();
    const int base = q.base_vertex_count();
    Json j;
    if constexpr (std::is_same_v<F, Fp>)
        j["field_prime"] = Fp::modulus();
    else
        j["field_prime"] = 0;
    std::vector<Arrow> arrows;
    for (const auto& a : q.quiver().arrows())
        if (a.src < base && a.dst < base) arrows.push_back(a);
    j["quiver"] = {{"type", rs.name().substr(0, 1)},
                   {"rank", rs.rank()},
                   {"orientation", orientation_to_json(Quiver(base, arrows))}};
    if (q.is_extended()) j["quiver"]["extended"] = true;
    Json dims = Json::object();
    for (int v = 0; v < q.vertex_count(); ++v) dims[vertex_label(v, base)] = m.dim(v);
    j["dims"] = dims;
    Json maps = Json::object();
    for (int a = 0; a < static_cast<int>(q.arrow_count()); ++a) {
        const auto& x = m.map(a);
        Json rows = Json::array();
        for (std::size_t r = 0; r < x.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(entry_json(x(r, c)));
            rows.push_back(row);
        }
        maps[q.arrow_name(a)] = rows;
    }
    j["maps"] = maps;
    return j;
}

template <ExactField F>
PiModule<F> module_from_json(const Json& j) {
    const auto h = module_header(j);
    const DoubledQuiver q = h.extended ? extended_doubled(h.orientation) : DoubledQuiver(h.orientation);
    const int base = q.base_vertex_count();
    const Json& dj = j.contains("dims") ? j.at("dims") : throw FormatError("module: missing field \"dims\"");
    Dims d(at(q.vertex_count()), 0);
    try {
        if (dj.is_array()) {
            if (dj.size() != d.size()) throw FormatError("module: dims has the wrong length");
            for (std::size_t v = 0; v < d.size(); ++v) d[v] = dj[v].get<int>();
        } else {
            for (int v = 0; v < q.vertex_count(); ++v) d[at(v)] = dj.value(vertex_label(v, base), 0);
            for (const auto& [key, val] : dj.items()) {
                bool known = false;
                for (int v = 0; v < q.vertex_count(); ++v) known = known || key == vertex_label(v, base);
                if (!known) throw FormatError("module: unknown vertex \"" + key + "\" in dims");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("module dims: ") + e.what());
    }
    for (int x : d)
        if (x < 0) throw FormatError("module: negative dimension");
    PiModule<F> m(q, d);
    if (j.contains("maps")) {
        for (const auto& [name, rows] : j.at("maps").items()) {
            const int a = q.arrow_by_name(name);
            if (a < 0) throw FormatError("module: unknown arrow \"" + name + "\"");
            const auto& h2 = q.arrow(a);
            Matrix<F> x(at(d[at(h2.dst)]), at(d[at(h2.src)]));
            if (rows.size() != x.rows()) throw FormatError("module: map " + name + " should be " + x.shape());
            for (std::size_t r = 0; r < x.rows(); ++r) {
                if (rows[r].size() != x.cols()) throw FormatError("module: map " + name + " should be " + x.shape());
                for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = entry_from_json<F>(rows[r][c]);
            }
            m.set_map(a, std::move(x));
        }
    }
    const auto rep = validate(m);
    if (!rep.ok) throw FormatError("module violates the preprojective relations: " + rep.message);
    return m;
}

template <ExactField F>
Json kq_module_to_json(const RootSystem& rs, const KQModule<F>& m) {
    Json j;
    j["quiver"] = {{"type", rs.name().substr(0, 1)}, {"rank", rs.rank()}, {"orientation", orientation_to_json(m.quiver())}};
    j["dims"] = m.dims();
    Json maps = Json::object();
    for (std::size_t a = 0; a < m.quiver().arrow_count(); ++a) {
        const auto& x = m.map(static_cast<int>(a));
        Json rows = Json::array();
        for (std::size_t r = 0; r < x.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(entry_json(x(r, c)));
            rows.push_back(row);
        }
        maps["a" + std::to_string(a + 1)] = rows;
    }
    j["maps"] = maps;
    return j;
}

Json polytope_to_json(const RootSystem& rs, const HyperplaneDatum& a) {
    Json j;
    j["type"] = rs.name();
    j["weight"] = vec_json(weight(rs, a));
    Json hyp = Json::array();
    const auto& gs = rs.chamber_weights();
    for (std::size_t k = 0; k < gs.size(); ++k) hyp.push_back({{"gamma", vec_json(gs[k])}, {"value", a[k]}});
    j["hyperplane"] = hyp;
    if (rs.enumerable()) {
        Json verts = Json::array();
        for (std::size_t w = 0; w < rs.elements().size(); ++w)
            verts.push_back({{"w", word_json(rs.elements()[w].word())}, {"mu", vec_json(vertex(rs, a, w))}});
        j["vertices"] = verts;
    }
    return j;
}

HyperplaneDatum polytope_from_json(const RootSystem& rs, const Json& j) {
    HyperplaneDatum a(rs.chamber_weights().size(), 0);
    std::vector<bool> seen(a.size(), false);
    const Json& hyp = j.contains("hyperplane") ? j.at("hyperplane") : throw FormatError("polytope: missing \"hyperplane\"");
    try {
        for (const auto& e : hyp) {
            const WeightVec g(e.at("gamma").get<std::vector<std::int64_t>>());
            const auto idx = g.size() == rs.n() ? rs.chamber_index(g) : std::nullopt;
            if (!idx) throw FormatError("polytope: " + e.at("gamma").dump() + " is not a chamber weight of " + rs.name());
            a[*idx] = e.at("value").get<std::int64_t>();
            seen[*idx] = true;
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("polytope: ") + e.what());
    }
    for (bool s : seen)
        if (!s) throw FormatError("polytope: hyperplane datum is missing some chamber weights");
    return a;
}

Json lusztig_to_json(const RootSystem& rs, const LusztigDatum& n) {
    return Json{{"type", rs.name()}, {"word", word_json(n.word)}, {"n", n.n}};
}

LusztigDatum lusztig_from_json(const Json& j) {
    LusztigDatum n;
    for (int i : get<std::vector<int>>(j, "word", "lusztig")) n.word.push_back(i - 1);
    n.n = get<std::vector<std::int64_t>>(j, "n", "lusztig");
    if (n.n.size() != n.word.size()) throw FormatError("lusztig: word and tuple lengths differ");
    return n;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') throw FormatError("unterminated list \"" + text + "\"");
        t = t.substr(1, t.size() - 2);
    }
    std::vector<std::int64_t> out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw FormatError("\"" + item + "\" is not an integer");
        }
    }
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    for (auto x : parse_int_list(text)) w.push_back(static_cast<int>(x) - 1);
    return w;
}

LusztigDatum parse_lusztig_spec(const std::string& text) {
    LusztigDatum n;
    bool have_word = false, have_n = false;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw FormatError("lusztig spec part \"" + part + "\" lacks a ':'");
        const auto key = part.substr(0, colon), val = part.substr(colon + 1);
        if (key == "word") {
            n.word = parse_word(val);
            have_word = true;
        } else if (key == "n") {
            n.n = parse_int_list(val);
            have_n = true;
        } else {
            throw FormatError("lusztig spec: unknown key \"" + key + "\"");
        }
    }
    if (!have_word || !have_n) throw FormatError("lusztig spec needs both word: and n:");
    if (n.word.size() != n.n.size()) throw FormatError("lusztig spec: word and tuple lengths differ");
    return n;
}

Json crystal_to_json(const RootSystem& rs, const CrystalGraph& g, const Word& label_word) {
    const Word word = label_word.empty() ? rs.w0_tables().graph.words.front() : label_word;
    Json j;
    j["type"] = rs.name();
    j["label_word"] = word_json(word);
    Json nodes = Json::array();
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        nodes.push_back({{"id", k},
                         {"weight", vec_json(g.weights[k])},
                         {"lusztig", lusztig_datum(rs, g.nodes[k], word).n},
                         {"hyperplane", g.nodes[k]}});
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.i + 1}});
    j["edges"] = edges;
    return j;
}

#define PREPROJ_INSTANTIATE(F)                                                  \
    template Json module_to_json<F>(const RootSystem&, const PiModule<F>&);     \
    template PiModule<F> module_from_json<F>(const Json&);                      \
    template Json kq_module_to_json<F>(const RootSystem&, const KQModule<F>&);

PREPROJ_INSTANTIATE(Fp)
PREPROJ_INSTANTIATE(Rational)

}  // namespace preproj
