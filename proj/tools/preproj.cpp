// preproj: command-line front end for the preprojective / MV-polytope library.
//
// Exit codes: 0 success, 1 a property check failed, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "preproj/crystal.hpp"
#include "preproj/io.hpp"
#include "preproj/lambda_sampler.hpp"
#include "preproj/n_gamma.hpp"
#include "preproj/reflection_functors.hpp"
#include "preproj/verify.hpp"

namespace fs = std::filesystem;
using namespace preproj;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type = "A3";
    int rank = 0;
    std::string orientation;
    std::uint64_t prime = 0;
    std::uint64_t seed = 1;
    int k = 5;
    int height = 4;
    std::string out;
    std::string suite;
    std::string word;
    std::string field = "prime";
    int cases = 100;

    std::string module_path, in_path, gamma, lusztig, from, to;
    int vertex = 0;
    bool star = false, hat = false, json = false;
};

std::shared_ptr<const RootSystem> root_system(const Options& o) {
    if (o.rank > 0) {
        if (o.type.size() != 1) throw UsageError("--rank expects --type to be a bare letter (A, D or E)");
        return build_root_system(o.type + std::to_string(o.rank));
    }
    return build_root_system(o.type);
}

Quiver orientation(const RootSystem& rs, const Options& o) {
    return o.orientation.empty() ? rs.default_orientation() : parse_orientation(rs, o.orientation);
}

void emit(const Options& o, const Json& j) {
    if (o.out.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        write_json_file(o.out, j);
    }
}

bool rational_field(const Options& o) {
    if (o.field == "rational") return true;
    if (o.field == "prime") return false;
    throw UsageError("--field must be \"prime\" or \"rational\"");
}

// Files record their field; prime files switch the process prime to theirs.
bool adopt_field(const Options& o, std::uint64_t file_prime) {
    if (file_prime == 0) return true;
    if (o.prime != 0 && o.prime != file_prime)
        throw UsageError("--prime " + std::to_string(o.prime) + " conflicts with the file's prime " + std::to_string(file_prime));
    Fp::set_modulus(file_prime);
    return false;
}

template <ExactField F>
int reflect_as(const Options& o, const Json& in) {
    const auto h = module_header(in);
    const auto m = module_from_json<F>(in);
    if (o.vertex < 1 || o.vertex > h.rs->rank()) throw UsageError("--vertex out of range");
    const auto out = o.star ? sigma_star(m, o.vertex - 1) : sigma(m, o.vertex - 1);
    emit(o, module_to_json(*h.rs, out));
    return 0;
}

int cmd_reflect(const Options& o) {
    const Json in = read_json_file(o.module_path);
    return adopt_field(o, module_header(in).field_prime) ? reflect_as<Rational>(o, in) : reflect_as<Fp>(o, in);
}

template <ExactField F>
int ngamma_as(const Options& o) {
    const auto rs = root_system(o);
    NGammaCache<F> cache(rs, orientation(*rs, o));
    const auto v = parse_int_list(o.gamma);
    if (v.size() != rs->n()) throw UsageError("--gamma needs " + std::to_string(rs->rank()) + " coordinates");
    const WeightVec gamma(v);
    const auto m = o.hat ? cache.nhat(gamma) : cache.n_of(gamma);
    emit(o, Json{{"gamma", gamma.coords()}, {"dimvec", m.dimvec().coords()}, {"module", module_to_json(*rs, m)}});
    return 0;
}

template <ExactField F>
int sample_as(const Options& o) {
    const auto rs = root_system(o);
    const Quiver q = orientation(*rs, o);
    NGammaCache<F> cache(rs, q);
    LusztigDatum n = parse_lusztig_spec(o.lusztig);
    if (!is_w0_word(*rs, n.word) || n.n.size() != n.word.size()) throw UsageError("--lusztig: word is not a reduced word of w0");
    const auto sink = rs->adapted_word(q, RootSystem::Adaptation::sink);
    n = transition(*rs, n, sink);
    const auto x = generic_kq_point<F>(*rs, q, n);
    const auto audit = dimension_audit(*rs, x);
    Json manifest{{"lusztig", lusztig_to_json(*rs, n)}, {"kq_point", kq_module_to_json(*rs, x)},
                  {"dimension_audit", {{"ok", audit.ok}, {"orbit", audit.orbit_dim}, {"fiber", audit.fiber_dim},
                                       {"expected", audit.expected}}},
                  {"samples", Json::array()}};
    if (!o.out.empty()) fs::create_directories(o.out);
    for (int s = 0; s < o.k; ++s) {
        const auto t = conormal_sample(x, mix_seed(o.seed, static_cast<std::uint64_t>(s)));
        const auto poly = polytope_of_module(cache, t);
        char name[32];
        std::snprintf(name, sizeof name, "sample_%03d.json", s);
        if (!o.out.empty()) write_json_file((fs::path(o.out) / name).string(), module_to_json(*rs, t));
        manifest["samples"].push_back(Json{{"file", name}, {"bz_ok", validate_bz(*rs, poly).ok()}, {"polytope", polytope_to_json(*rs, poly)}});
    }
    if (o.out.empty()) {
        std::cout << manifest.dump(2) << '\n';
    } else {
        write_json_file((fs::path(o.out) / "manifest.json").string(), manifest);
    }
    return audit.ok ? 0 : 1;
}

template <ExactField F>
int component_bz_as(const Options& o) {
    const auto rs = root_system(o);
    NGammaCache<F> cache(rs, orientation(*rs, o));
    const LusztigDatum n = parse_lusztig_spec(o.lusztig);
    if (!is_w0_word(*rs, n.word) || n.n.size() != n.word.size()) throw UsageError("--lusztig: word is not a reduced word of w0");
    const auto b = polytope_from_lusztig(*rs, n);
    const auto cb = component_bz_escalating(cache, b, o.k, o.seed);
    const bool match = cb.datum == b;
    const Json report{{"lusztig", lusztig_to_json(*rs, n)},
                      {"sink_lusztig", lusztig_to_json(*rs, cb.sink_datum)},
                      {"samples", cb.samples},
                      {"bz_ok", cb.ok()},
                      {"matches_crystal", match},
                      {"violations", cb.report.summary(*rs)},
                      {"component_bz", polytope_to_json(*rs, cb.datum)}};
    if (o.json || !o.out.empty()) {
        emit(o, report);
    } else {
        std::cout << "samples " << cb.samples << ", BZ " << (cb.ok() ? "ok" : "FAILED") << ", equals P(b) "
                  << (match ? "yes" : "NO") << '\n';
        if (!cb.ok()) std::cout << cb.report.summary(*rs) << '\n';
    }
    return cb.ok() && match ? 0 : 1;
}

std::vector<fs::path> sample_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw UsageError("--in: not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json" && e.path().filename() != "manifest.json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError("--in: no module files in " + dir);
    return files;
}

template <ExactField F>
int strata_as(const Options& o, const std::vector<Json>& docs) {
    const auto h = module_header(docs.front());
    NGammaCache<F> cache(h.rs, h.orientation);
    std::vector<PiModule<F>> samples;
    for (const auto& d : docs) samples.push_back(module_from_json<F>(d));
    const auto rep = stratify(cache, samples);
    Json strata = Json::array();
    for (const auto& [poly, count] : rep.counts)
        strata.push_back(Json{{"count", count}, {"bz_ok", validate_bz(*h.rs, poly).ok()}, {"polytope", polytope_to_json(*h.rs, poly)}});
    emit(o, Json{{"total", rep.total()}, {"strata", strata}});
    return 0;
}

int cmd_strata(const Options& o) {
    std::vector<Json> docs;
    for (const auto& f : sample_files(o.in_path)) docs.push_back(read_json_file(f.string()));
    const auto prime = module_header(docs.front()).field_prime;
    for (const auto& d : docs)
        if (module_header(d).field_prime != prime) throw FormatError("sample files mix fields");
    return adopt_field(o, prime) ? strata_as<Rational>(o, docs) : strata_as<Fp>(o, docs);
}

int cmd_verify(const Options& o) {
    SuiteConfig cfg;
    cfg.type = o.rank > 0 ? o.type + std::to_string(o.rank) : o.type;
    cfg.orientation = o.orientation;
    cfg.field = rational_field(o) ? FieldMode::rational : FieldMode::prime;
    cfg.cases = o.cases;
    cfg.seed = o.seed;
    cfg.height = o.height;
    cfg.k = o.k;
    SuiteReport rep;
    try {
        rep = run_suite(o.suite, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit(o, rep.to_json());
    return rep.ok() ? 0 : 1;
}

int cmd_export_crystal(const Options& o) {
    const auto rs = root_system(o);
    const Word label = o.word.empty() ? Word{} : parse_word(o.word);
    if (!label.empty() && !is_w0_word(*rs, label)) throw UsageError("--word is not a reduced word of w0");
    const auto g = generate(*rs, o.height);
    const Json j = crystal_to_json(*rs, g, label);
    if (o.out.empty()) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    write_json_file(o.out + ".json", j);
    std::ofstream dot(o.out + ".dot");
    if (!dot) throw FormatError("cannot write " + o.out + ".dot");
    dot << to_dot(*rs, g, label);
    return 0;
}

template <ExactField F>
Json module_polytope(const Json& in) {
    const auto h = module_header(in);
    NGammaCache<F> cache(h.rs, h.orientation);
    return polytope_to_json(*h.rs, polytope_of_module(cache, module_from_json<F>(in)));
}

int cmd_convert(const Options& o) {
    const Json in = read_json_file(o.in_path);
    const auto need_word = [&] {
        if (o.word.empty()) throw UsageError("converting to a Lusztig datum needs --word");
        return parse_word(o.word);
    };
    Json poly;
    if (o.from == "module") {
        if (o.to == "module") throw UsageError("nothing to convert");
        poly = adopt_field(o, module_header(in).field_prime) ? module_polytope<Rational>(in) : module_polytope<Fp>(in);
    } else if (o.from == "polytope") {
        poly = in;
    } else if (o.from == "lusztig") {
        const auto rs = root_system_from_json(in.at("type"));
        poly = polytope_to_json(*rs, polytope_from_lusztig(*rs, lusztig_from_json(in)));
    } else {
        throw UsageError("--from must be module, polytope or lusztig");
    }
    if (o.to == "polytope") {
        emit(o, poly);
    } else if (o.to == "lusztig") {
        const auto rs = root_system_from_json(poly.at("type"));
        const auto word = need_word();
        if (!is_w0_word(*rs, word)) throw UsageError("--word is not a reduced word of w0");
        emit(o, lusztig_to_json(*rs, lusztig_datum(*rs, polytope_from_json(*rs, poly), word)));
    } else {
        throw UsageError("--to must be polytope or lusztig");
    }
    return 0;
}

void add_common(CLI::App* c, Options& o) {
    c->add_option("--type", o.type, "root system, e.g. A3 or D4 (or a letter with --rank)");
    c->add_option("--rank", o.rank, "rank, when --type is a bare letter");
    c->add_option("--orientation", o.orientation, "edge list such as \"1-2,2-3\" (default: i -> j for i < j)");
    c->add_option("--prime", o.prime, "field prime (default 1000003, or $PREPROJ_PRIME)");
    c->add_option("--seed", o.seed, "master seed");
    c->add_option("--k", o.k, "conormal samples per component");
    c->add_option("--height", o.height, "crystal height bound");
    c->add_option("--out", o.out, "output file, directory or prefix");
    c->add_option("--word", o.word, "reduced word of w0, 1-based, e.g. 1,2,1");
    c->add_option("--field", o.field, "prime or rational");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Preprojective algebra modules and MV polytopes"};
    app.require_subcommand(1);

    auto* reflect = app.add_subcommand("reflect", "apply Sigma_i (or Sigma_i^* with --star) to a module file");
    add_common(reflect, o);
    reflect->add_option("--module", o.module_path, "module JSON")->required();
    reflect->add_option("--vertex", o.vertex, "vertex, 1-based")->required();
    reflect->add_flag("--star", o.star, "apply the left adjoint instead");

    auto* ngamma = app.add_subcommand("ngamma", "build N(gamma)");
    add_common(ngamma, o);
    ngamma->add_option("--gamma", o.gamma, "weight in fundamental-weight coordinates, e.g. [-1,1,0]")->required();
    ngamma->add_flag("--hat", o.hat, "the extended-quiver module instead");

    auto* sample = app.add_subcommand("sample", "sample generic points of a component of Lambda(nu)");
    add_common(sample, o);
    sample->add_option("--lusztig", o.lusztig, "\"word:2,1,3,2,1,3;n:1,0,2,0,1,0\"")->required();

    auto* cbz = app.add_subcommand("component-bz", "entrywise-minimum D_gamma over samples of a component");
    add_common(cbz, o);
    cbz->add_option("--lusztig", o.lusztig, "Lusztig datum of the component")->required();
    cbz->add_flag("--json", o.json, "print the full JSON report");

    auto* strata = app.add_subcommand("strata", "group sampled modules by polytope");
    add_common(strata, o);
    strata->add_option("--in", o.in_path, "directory written by sample")->required();

    auto* verify = app.add_subcommand("verify", "run a property suite");
    add_common(verify, o);
    verify->add_option("--suite", o.suite, "suite name")->required();
    verify->add_option("--cases", o.cases, "random cases");

    auto* xc = app.add_subcommand("export-crystal", "write the MV crystal up to --height as DOT and JSON");
    add_common(xc, o);

    auto* convert = app.add_subcommand("convert", "module -> polytope, polytope <-> Lusztig datum");
    add_common(convert, o);
    convert->add_option("--in", o.in_path, "input JSON")->required();
    convert->add_option("--from", o.from, "module, polytope or lusztig")->required();
    convert->add_option("--to", o.to, "polytope or lusztig")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o.prime != 0) {
            Fp::set_modulus(o.prime);
        } else if (const char* env = std::getenv("PREPROJ_PRIME")) {
            Fp::set_modulus(std::stoull(env));
        }
        const bool rational = rational_field(o);
        if (*reflect) return cmd_reflect(o);
        if (*ngamma) return rational ? ngamma_as<Rational>(o) : ngamma_as<Fp>(o);
        if (*sample) return rational ? sample_as<Rational>(o) : sample_as<Fp>(o);
        if (*cbz) return rational ? component_bz_as<Rational>(o) : component_bz_as<Fp>(o);
        if (*strata) return cmd_strata(o);
        if (*verify) return cmd_verify(o);
        if (*xc) return cmd_export_crystal(o);
        if (*convert) return cmd_convert(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
