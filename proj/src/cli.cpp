#include "domtri/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <sstream>
#include <json.hpp>

#include "domtri/coloring.hpp"
#include "domtri/generators.hpp"
#include "domtri/io.hpp"
#include "domtri/oracle.hpp"
#include "domtri/pipeline.hpp"
#include "domtri/reduction.hpp"
#include "domtri/wnt.hpp"

namespace domtri {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string dir;
    std::string family;
    std::string name;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t steps = 0;
    std::size_t budget_n = OracleBudget{}.max_vertices;
    std::string set;
    bool trace = false;
    bool dot = false;
    bool exact = false;
    bool search = false;
    std::string verify;
};

VertexSet parse_set(const std::string& text) {
    VertexSet out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Error(ErrorCode::FormatError, "bad vertex id '" + item + "' in --set");
        out.push_back(v);
    }
    return make_set(out);
}

PlaneGraph source_graph(const Options& o) {
    if (!o.input.empty()) return load_graph(o.input);
    if (o.family.empty() && o.name.empty())
        throw Error(ErrorCode::FormatError, "give --input, --family or --name");
    GenSpec spec;
    spec.family = o.family.empty() ? Family::Fixture : parse_family(o.family);
    spec.n = o.n;
    spec.seed = o.seed;
    spec.steps = o.steps;
    spec.fixture = o.name;
    if (spec.family == Family::Fixture && spec.fixture.empty())
        throw Error(ErrorCode::FormatError, "--family fixture needs --name");
    return generate(spec);
}

json step_json(const ReductionStep& s, bool trace) {
    json j = json::parse(to_json(s));
    if (!trace) j.erase("trace");
    return j;
}

// Returns the report text for one graph.
std::string report(const std::string& verb, const PlaneGraph& g, const Options& o) {
    if (verb == "gen") return o.dot ? export_dot(g, {{}, {}, external_vertices(g)}) : to_json(g);

    if (verb == "dominate") {
        DominationResult r = dominate(g);
        if (o.dot) {
            VertexSet removed;
            for (const auto& s : r.steps) removed = set_union(removed, s.removed);
            return export_dot(g, {removed, r.dominating_set, external_vertices(g)});
        }
        json j = json::parse(to_json(r, g.order()));
        j["steps"] = json::array();
        for (const auto& s : r.steps) j["steps"].push_back(step_json(s, o.trace));
        return j.dump();
    }

    if (verb == "reduce") {
        PlaneGraph cur = g;
        json steps = json::array();
        VertexSet removed;
        while (auto s = find_reduction(cur)) {
            cur = apply_reduction(cur, *s);
            removed = set_union(removed, s->removed);
            steps.push_back(step_json(*s, o.trace));
        }
        if (o.dot) return export_dot(g, {removed, {}, external_vertices(g)});
        json j;
        j["steps"] = steps;
        j["q"] = cur.order();
        j["residual"] = json::parse(to_json(cur));
        return j.dump();
    }

    if (verb == "color") {
        ThreeColoring c = wnt_dominating_coloring(g);
        json j;
        j["classes"] = json::array({c.classes[0], c.classes[1], c.classes[2]});
        return j.dump();
    }

    if (verb == "verify") {
        json j;
        if (!o.set.empty()) {
            j["dominates"] = verify_dominating_set(g, parse_set(o.set));
        } else {
            j["wnt"] = static_cast<bool>(is_wnt(g));
            j["wnt_reference"] = is_wnt_reference(g);
            j["near_triangulation"] = is_near_triangulation(g);
            j["triangulation"] = is_triangulation(g);
        }
        return j.dump();
    }

    if (verb == "oracle") {
        OracleBudget budget;
        budget.max_vertices = o.budget_n;
        json j;
        if (!o.verify.empty()) {
            j["dominates"] = verify_dominating_set(g, parse_set(o.verify));
        } else if (o.search) {
            auto s = exhaustive_reduction_search(g, budget);
            j["step"] = s ? step_json(*s, false) : json(nullptr);
        } else {
            VertexSet best = minimum_dominating_set(g, budget);
            j["gamma"] = best.size();
            j["set"] = best;
        }
        return j.dump();
    }

    // stats
    auto bd = blocks(g);
    json j;
    j["n"] = g.order();
    j["m"] = g.size();
    j["components"] = g.component_count();
    j["faces"] = g.faces().size();
    j["external"] = external_vertices(g);
    j["blocks"] = bd.blocks.size();
    j["cutvertices"] = bd.cutvertices;
    bool wnt = static_cast<bool>(is_wnt(g));
    j["wnt"] = wnt;
    j["near_triangulation"] = is_near_triangulation(g);
    j["triangulation"] = is_triangulation(g);
    j["bound"] = bound(g.order());
    if (wnt) j["reducible"] = find_reduction_strict(g).has_value();
    return j.dump();
}

json error_json(const Error& e) {
    json j;
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    if (!e.witness().empty()) j["witness"] = json::parse(e.witness());
    return j;
}

// Runs fn, mapping exceptions to exit codes and diagnostics.
template <class Fn>
int guarded(Fn&& fn, std::ostream& err, json* diag = nullptr) {
    try {
        fn();
        return 0;
    } catch (const Error& e) {
        json j = error_json(e);
        if (diag) *diag = j;
        else err << j.dump() << "\n";
        return is_defect(e.code()) ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        json j{{"error", "FormatError"}, {"message", e.what()}};
        if (diag) *diag = j;
        else err << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j{{"error", "Internal"}, {"message", e.what()}};
        if (diag) *diag = j;
        else err << j.dump() << "\n";
        return 2;
    }
}

int run_batch(const std::string& verb, const Options& o, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(o.dir)) {
        err << json{{"error", "FormatError"}, {"message", "not a directory: " + o.dir}}.dump() << "\n";
        return 1;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int status = 0;
    for (const auto& path : files) {
        json line;
        line["file"] = path.filename().string();
        json diag;
        int code = guarded(
            [&] {
                std::string text = report(verb, load_graph(path.string()), o);
                line["report"] = o.dot ? json(text) : json::parse(text);
            },
            err, &diag);
        if (code) line["error"] = diag;
        out << line.dump() << "\n";
        status = std::max(status, code);
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dominating sets in plane triangulations via weak near-triangulation reductions", "domtri"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"gen", "Generate a graph"},
        {"dominate", "Dominating set within floor(17n/53) for a triangulation"},
        {"reduce", "Reduce a weak near-triangulation until irreducible"},
        {"color", "Three classes, each dominating"},
        {"verify", "Check a dominating set (--set) or the graph classes"},
        {"oracle", "Exact domination, exhaustive reduction search, or set check"},
        {"stats", "Summary of a graph"},
    };
    for (const auto& [verb, help] : verbs) {
        CLI::App* sub = app.add_subcommand(verb, help);
        sub->add_option("--input", o.input, "JSON graph file");
        sub->add_option("--dir", o.dir, "Process every .json file in a directory");
        sub->add_option("--family", o.family, "stacked, flipwalk, wheel, fan_strip or fixture");
        sub->add_option("--name", o.name, "Fixture name");
        sub->add_option("--n", o.n, "Size parameter of the family");
        sub->add_option("--seed", o.seed, "Generator seed");
        sub->add_option("--steps", o.steps, "Flip attempts for flipwalk (default 5n)");
        sub->add_option("--budget-n", o.budget_n, "Oracle vertex budget");
        sub->add_option("--set", o.set, "Comma-separated vertex ids");
        sub->add_flag("--trace", o.trace, "Include case traces of reduction steps");
        sub->add_flag("--dot", o.dot, "Print DOT instead of JSON");
        if (verb == "oracle") {
            sub->add_flag("--exact", o.exact, "Exact domination number (default)");
            sub->add_flag("--search-reduction", o.search, "Exhaustive reduction search");
            sub->add_option("--verify", o.verify, "Check whether the given ids dominate");
        }
    }

    std::vector<std::string> storage{"domtri"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", "FormatError"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    const std::string verb = app.get_subcommands().front()->get_name();
    if (!o.dir.empty()) return run_batch(verb, o, out, err);
    return guarded(
        [&] {
            std::string text = report(verb, source_graph(o), o);
            out << text << (text.ends_with('\n') ? "" : "\n");
        },
        err);
}

}  // namespace domtri
