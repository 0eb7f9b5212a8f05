#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "plmorse/io.hpp"
#include "plmorse/plmorse.hpp"

using namespace plmorse;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 negative verdict or nothing found, 2 input error.
std::string input_path, output_path;
std::uint64_t seed = 1;

std::string slurp(std::istream& in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text = slurp(std::cin);
    } else {
        std::ifstream f(path);
        if (!f) throw Error("cannot open " + path);
        text = slurp(f);
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

SimplicialComplex read_complex(std::string* name = nullptr) { return io::complex_from_json(read_json_file(input_path), name); }

void emit(const json& j) {
    if (output_path.empty() || output_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw Error("cannot write " + output_path);
    f << j.dump(2) << "\n";
}

void emit_text(const std::string& s) {
    if (output_path.empty() || output_path == "-") {
        std::cout << s;
        return;
    }
    std::ofstream f(output_path);
    f << s;
}

std::vector<Coefficients> parse_fields(const std::string& list) {
    std::vector<Coefficients> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_coefficients(item));
    if (out.empty()) throw Error("no coefficient fields given");
    return out;
}

std::string table(const SimplicialComplex& c, const MorseReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(14) << "vertex" << std::setw(12) << "status" << std::setw(22) << "index:mult"
       << std::setw(22) << "strong" << "boundary\n";
    for (const auto& rec : r.records) {
        std::string mult;
        const auto& fm = rec.multiplicities.front();
        for (std::size_t k = 0; k < fm.mu.size(); ++k)
            if (fm.mu[k]) mult += (mult.empty() ? "" : ",") + std::to_string(k) + ":" + std::to_string(fm.mu[k]);
        if (mult.empty()) mult = "-";
        std::string bound = to_string(rec.boundary.kind);
        if (rec.boundary.index >= 0) bound += "(" + std::to_string(rec.boundary.index) + ")";
        os << std::setw(14) << rec.vertex.to_string() << std::setw(12) << to_string(rec.status) << std::setw(22)
           << mult + " [" + fm.field.name() + "]" << std::setw(22) << to_string(rec.strong_regularity) << bound
           << "\n";
    }
    for (const auto& s : r.fields) {
        os << "mu over " << s.field.name() << ":";
        for (auto x : s.mu) os << " " << x;
        os << "  betti:";
        for (auto x : s.betti) os << " " << x;
        os << "  euler " << (s.euler_equation ? "ok" : "FAIL") << (s.tight ? "  tight" : "") << "\n";
    }
    os << "pl morse: " << to_string(r.pl_morse.verdict);
    if (r.pl_morse.witness) os << " (vertex " << r.pl_morse.witness->to_string() << ": " << r.pl_morse.reason << ")";
    os << "\n";
    (void)c;
    return os.str();
}

std::optional<bool> manifold_mode(bool assume, bool off) {
    if (assume && off) throw Error("--assume-manifold and --no-manifold are exclusive");
    if (assume) return true;
    if (off) return false;
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PL Morse theory on simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-i,--input", input_path, "input JSON file (default stdin)");
    app.add_option("-o,--output", output_path, "output file (default stdout)");
    app.add_option("--seed", seed, "PRNG seed")->capture_default_str();

    // build
    auto* build = app.add_subcommand("build", "emit a built-in or derived complex");
    std::vector<std::string> build_args;
    int times = 1;
    build->add_option("what", build_args, "torus7 | duncehat8 | rp2-6 | simplex D | simplex-boundary D | cycle N | "
                                          "cyclic D N | suspension | cone | bsd")
        ->required();
    build->add_option("--times", times, "repetitions for bsd")->capture_default_str();

    auto* homology = app.add_subcommand("homology", "homology of a complex");
    std::string coeff = "Z";
    bool reduced = false;
    homology->add_option("--coeff", coeff, "Z, Q or Fp")->capture_default_str();
    homology->add_flag("--reduced", reduced, "reduced homology");

    auto* morse = app.add_subcommand("morse", "generic PL functions given by vertex orders");
    morse->require_subcommand(1);
    std::string order_path, fields_list = "Q,F2", format = "json";
    int random_orders = 0;
    bool assume_manifold = false, no_manifold = false;
    auto* analyze_cmd = morse->add_subcommand("analyze", "classify every vertex");
    analyze_cmd->add_option("--order", order_path, "order JSON file");
    analyze_cmd->add_option("--random-orders", random_orders, "analyze N seeded random orders");
    analyze_cmd->add_option("--fields", fields_list, "coefficient fields")->capture_default_str();
    analyze_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    analyze_cmd->add_flag("--assume-manifold", assume_manifold, "skip the manifold check and assume yes");
    analyze_cmd->add_flag("--no-manifold", no_manifold, "H-classification only");
    auto* sweep_cmd = morse->add_subcommand("sweep", "Betti numbers of sublevel spans");
    sweep_cmd->add_option("--order", order_path, "order JSON file")->required();
    sweep_cmd->add_option("--coeff", coeff, "Q or Fp")->capture_default_str();
    auto* plm_cmd = morse->add_subcommand("check-plmorse", "decide whether the order is a PL Morse function");
    plm_cmd->add_option("--order", order_path, "order JSON file")->required();
    plm_cmd->add_flag("--assume-manifold", assume_manifold, "skip the manifold check");

    auto* dmorse = app.add_subcommand("dmorse", "discrete Morse functions");
    dmorse->require_subcommand(1);
    std::string function_path;
    auto* convert = dmorse->add_subcommand("convert", "induced PL function on the barycentric subdivision");
    convert->add_option("--function", function_path, "discrete Morse JSON (values or matching)")->required();
    convert->add_option("--fields", fields_list, "coefficient fields")->capture_default_str();

    auto* neighborhood = app.add_subcommand("neighborhood", "regular neighborhood in the second derived subdivision");
    std::string sub_path;
    neighborhood->add_option("--sub", sub_path, "subcomplex JSON file")->required();

    app.add_subcommand("boundary", "boundary subcomplex");

    auto* manifold = app.add_subcommand("manifold", "manifold recognition");
    manifold->require_subcommand(1);
    manifold->add_subcommand("check", "combinatorial manifold check");

    auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
    bool certify = false;
    std::string targets = default_targets(), basepoint;
    double budget = 120;
    int max_generators = 4;
    pi1->add_flag("--certify-nontrivial", certify, "search for a non-trivial finite quotient");
    pi1->add_option("--targets", targets, "quotient targets")->capture_default_str();
    pi1->add_option("--budget-seconds", budget, "search budget")->capture_default_str();
    pi1->add_option("--max-generators", max_generators, "abort the search above this many generators")
        ->capture_default_str();
    pi1->add_option("--basepoint", basepoint, "basepoint label (default: smallest)");

    auto* s9 = app.add_subcommand("reproduce-section9", "dunce hat neighborhood in the cyclic 5-polytope");
    bool quiet = false;
    s9->add_option("--targets", targets, "quotient targets")->capture_default_str();
    s9->add_option("--budget-seconds", budget, "search budget")->capture_default_str();
    s9->add_flag("-q,--quiet", quiet, "no progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            const auto& a = build_args;
            auto arg = [&](std::size_t i) {
                if (i >= a.size()) throw Error("build " + a[0] + ": missing argument");
                return std::stoi(a[i]);
            };
            SimplicialComplex c;
            std::string name = a[0];
            if (a[0] == "torus7") c = torus7();
            else if (a[0] == "duncehat8") c = dunce_hat8();
            else if (a[0] == "rp2-6") c = rp2_6();
            else if (a[0] == "simplex") c = simplex(arg(1));
            else if (a[0] == "simplex-boundary") c = simplex_boundary(arg(1));
            else if (a[0] == "cycle") c = cycle(arg(1));
            else if (a[0] == "cyclic") c = cyclic_polytope_boundary(arg(1), arg(2));
            else if (a[0] == "suspension" || a[0] == "cone" || a[0] == "bsd") {
                std::string in_name;
                c = read_complex(&in_name);
                if (a[0] == "suspension") c = suspension(c);
                else if (a[0] == "cone") c = cone(c);
                else
                    for (int i = 0; i < times; ++i) c = barycentric_subdivision(c).complex;
                name = a[0] + "(" + in_name + ")";
            } else
                throw Error("unknown complex " + a[0]);
            for (std::size_t i = 1; i < a.size(); ++i) name += " " + a[i];
            emit(io::complex_to_json(c, name));
            return 0;
        }
        if (homology->parsed()) {
            const auto c = read_complex();
            if (coeff == "Z")
                emit(io::homology_to_json(integral_homology(c, reduced), c.dimension()));
            else {
                const auto f = parse_coefficients(coeff);
                emit(io::homology_to_json(betti(c, f, reduced), c.dimension(), f, reduced));
            }
            return 0;
        }
        if (analyze_cmd->parsed()) {
            const auto c = read_complex();
            AnalyzeOptions opt{parse_fields(fields_list), manifold_mode(assume_manifold, no_manifold)};
            if (order_path.empty() == (random_orders == 0))
                throw Error("give exactly one of --order and --random-orders");
            if (!order_path.empty()) {
                const auto f = io::order_from_json(c, read_json_file(order_path));
                const auto rep = analyze(c, f, opt);
                if (format == "table")
                    emit_text(table(c, rep));
                else
                    emit(io::report_to_json(rep));
                return 0;
            }
            std::mt19937_64 rng(seed);
            json runs = json::array();
            std::string text = "seed " + std::to_string(seed) + "\n";
            if (!opt.manifold) opt.manifold = check_manifold(c).verdict == Verdict::yes;
            for (int i = 0; i < random_orders; ++i) {
                const auto f = VertexOrder::random(c, rng);
                const auto rep = analyze(c, f, opt);
                json run = io::report_to_json(rep);
                run["order"] = io::order_to_json(c, f)["order"];
                runs.push_back(std::move(run));
                text += "order " + std::to_string(i + 1) + ":";
                for (const auto& l : f.labels(c)) text += " " + l.to_string();
                text += "\n" + table(c, rep);
            }
            if (format == "table")
                emit_text(text);
            else
                emit({{"seed", seed}, {"runs", std::move(runs)}});
            return 0;
        }
        if (sweep_cmd->parsed()) {
            const auto c = read_complex();
            const auto f = io::order_from_json(c, read_json_file(order_path));
            const auto field = parse_coefficients(coeff == "Z" ? "Q" : coeff);
            const auto profiles = sweep(c, f, field);
            json steps = json::array();
            for (std::size_t i = 0; i < profiles.size(); ++i)
                steps.push_back({{"vertex", io::label_to_json(c.label(f.at(i)))}, {"betti", profiles[i]}});
            emit({{"field", field.name()}, {"steps", std::move(steps)}, {"consistent", sweep_consistent(c, f, field)}});
            return 0;
        }
        if (plm_cmd->parsed()) {
            const auto c = read_complex();
            const auto f = io::order_from_json(c, read_json_file(order_path));
            const auto v = check_pl_morse(c, f, assume_manifold);
            emit(io::verdict_to_json(v));
            return v.verdict == Verdict::no ? 1 : 0;
        }
        if (convert->parsed()) {
            const auto c = read_complex();
            HasseDiagram h(c);
            const auto g = io::discrete_morse_from_json(c, h, read_json_file(function_path));
            const auto res = to_pl_morse(c, g);
            const auto crit = critical_cells(h, g);
            json cells = json::array();
            for (auto i : crit) cells.push_back(io::simplex_key(c, h.cells[i]));
            AnalyzeOptions opt{parse_fields(fields_list), !res.guarantees_withheld};
            const auto rep = analyze(res.derived.complex, res.order, opt);
            json vertex_of = json::object();
            for (std::size_t i = 0; i < h.size(); ++i)
                vertex_of[io::simplex_key(c, h.cells[i])] = io::label_to_json(res.derived.complex.label(res.cell_vertex[i]));
            json out{{"derived", io::complex_to_json(res.derived.complex, "bsd")},
                     {"order", io::order_to_json(res.derived.complex, res.order)["order"]},
                     {"cell_vertex", std::move(vertex_of)},
                     {"critical_cells", std::move(cells)},
                     {"guarantees_withheld", res.guarantees_withheld},
                     {"report", io::report_to_json(rep)}};
            if (!res.note.empty()) out["note"] = res.note;
            emit(out);
            return 0;
        }
        if (neighborhood->parsed()) {
            const auto c = read_complex();
            const auto k = io::complex_from_json(read_json_file(sub_path));
            emit(io::neighborhood_to_json(regular_neighborhood(c, k)));
            return 0;
        }
        if (app.got_subcommand("boundary")) {
            std::string name;
            const auto c = read_complex(&name);
            emit(io::complex_to_json(boundary_subcomplex(c), "boundary(" + name + ")"));
            return 0;
        }
        if (manifold->parsed()) {
            const auto c = read_complex();
            const auto m = check_manifold(c);
            json out{{"verdict", to_string(m.verdict)}, {"dim", m.dimension}, {"has_boundary", m.has_boundary}};
            if (!m.witness.empty()) out["witness"] = m.witness;
            emit(out);
            return m.verdict == Verdict::no ? 1 : 0;
        }
        if (pi1->parsed()) {
            const auto c = read_complex();
            if (c.empty()) throw Error("empty complex");
            const auto reduced_c = pi1_reduce(c);
            const Label base = basepoint.empty() ? reduced_c.label(0) : io::label_from_text(basepoint);
            if (!reduced_c.find(base)) throw Error("basepoint " + base.to_string() + " is not a vertex of the reduced complex");
            const auto raw = presentation(reduced_c, base);
            const auto p = tietze_simplify(raw);
            const auto ab = abelianization(p);
            json tors = json::array();
            for (const auto& t : ab.torsion) tors.push_back(io::integer_to_json(t));
            json out{{"raw", {{"generators", raw.generators}, {"relators", raw.relators.size()}}},
                     {"presentation", io::presentation_to_json(p)},
                     {"abelianization", {{"free_rank", ab.free_rank}, {"torsion", std::move(tors)}}}};
            int code = 0;
            if (certify) {
                SearchOptions so{parse_targets(targets), budget, max_generators};
                const auto s = finite_quotient_search(p, so);
                json q{{"searched", s.searched}, {"budget_exhausted", s.budget_exhausted}};
                if (s.certificate) {
                    q["certificate"] = io::certificate_to_json(*s.certificate);
                    q["verified"] = verify_certificate(p, *s.certificate);
                } else {
                    q["certificate"] = nullptr;
                    code = 1;
                }
                out["quotient"] = std::move(q);
            }
            emit(out);
            return code;
        }
        if (s9->parsed()) {
            MazurOptions mo;
            mo.search = SearchOptions{parse_targets(targets), budget, 4};
            if (!quiet) mo.progress = [](const std::string& s) { std::cerr << "... " << s << std::endl; };
            const auto r = mazur_neighborhood(mo);
            json non_faces = json::array();
            for (const auto& t : r.non_faces) {
                std::string s;
                for (const auto& l : t) s += l.to_string();
                non_faces.push_back(s);
            }
            json tors = json::array();
            for (const auto& t : r.abelianization.torsion) tors.push_back(io::integer_to_json(t));
            json q{{"searched", r.quotient.searched}, {"verified", r.certificate_verified}};
            if (r.quotient.certificate)
                q["certificate"] = io::certificate_to_json(*r.quotient.certificate);
            else
                q["certificate"] = nullptr;
            json out{
                {"embedding",
                 {{"cyclic_polytope_facets", r.cyclic_facets},
                  {"dunce_hat_is_subcomplex", r.embedded},
                  {"dunce_hat_is_full", r.full_subcomplex},
                  {"triangle_rule", r.triangle_rule},
                  {"missing_triangles", std::move(non_faces)}}},
                {"neighborhood",
                 {{"f_vector", r.neighborhood_f.counts},
                  {"euler_characteristic", r.neighborhood_euler},
                  {"z_acyclic", r.neighborhood_acyclic}}},
                {"boundary",
                 {{"f_vector", r.boundary_f.counts},
                  {"closed_pseudomanifold", r.boundary_pseudomanifold},
                  {"vertex_links_2_spheres", r.boundary_links_spheres},
                  {"homology", io::homology_to_json(r.boundary_homology, 3)},
                  {"homology_sphere", r.homology_sphere}}},
                {"pi1",
                 {{"reduced_f_vector", r.reduced_f.counts},
                  {"raw", {{"generators", r.raw_generators}, {"relators", r.raw_relators}}},
                  {"presentation", io::presentation_to_json(r.presentation)},
                  {"abelianization", {{"free_rank", r.abelianization.free_rank}, {"torsion", std::move(tors)}}},
                  {"quotient", std::move(q)}}},
                {"verdict", r.verdict}};
            emit(out);
            return r.not_a_ball ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
