#include "romik/cli.hpp"

#include "romik/acceptance.hpp"
#include "romik/berggren.hpp"
#include "romik/error.hpp"
#include "romik/json_io.hpp"
#include "romik/lagrange.hpp"
#include "romik/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace romik::cli {

namespace {

std::size_t max_iterations(const std::optional<std::size_t>& flag) {
    if (flag) return *flag;
    const char* env = std::getenv("ROMIK_MAX_ITER");
    if (env == nullptr || *env == '\0') return kDefaultMaxIter;
    const std::string text(env);
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        text.size() > 18) {
        throw ParseError("ROMIK_MAX_ITER must be a non-negative integer, got '" + text + "'");
    }
    return std::stoull(text);
}

std::string triple_key(const Triple& t) {
    std::ostringstream os;
    os << t.a() << ',' << t.b() << ',' << t.c();
    return os.str();
}

std::string label(Digit d) { return "M" + std::to_string(to_int(d)); }

std::string compact(const Word& w) {
    std::string s;
    for (Digit d : w) s += static_cast<char>('0' + to_int(d));
    return s;
}

std::string periodic_text(const ExpansionResult& r) {
    std::string s = "[";
    if (!r.preperiod.empty()) s += to_string(r.preperiod) + ",";
    return s + "(" + to_string(r.period) + ")^inf]";
}

std::string dot_quote(const std::string& s) { return '"' + s + '"'; }

// --- expand -----------------------------------------------------------------

struct ExpandArgs {
    std::string point;
    bool both = false;
    std::optional<std::size_t> n;
    std::optional<std::size_t> max_iter;
    std::string format = "json";
};

void do_expand(const ExpandArgs& a, std::ostream& out) {
    const CirclePoint p = parse_point(a.point);
    const bool json = a.format == "json";
    if (a.n) {
        if (a.both) throw InvalidArgument("--both and -n cannot be combined");
        const Word w = expand_stream(p, *a.n);
        out << (json ? to_json(w).dump() : to_string(w)) << '\n';
        return;
    }
    if (p.is_rational()) {
        if (a.both) {
            const auto [first, second] = expand_rational_both(p);
            if (json) {
                out << Json::array({to_json(first), to_json(second)}).dump() << '\n';
            } else {
                out << first << '\n' << second << '\n';
            }
        } else {
            const RationalExpansion e = expand_rational(p);
            out << (json ? to_json(e).dump() : to_string(e)) << '\n';
        }
        return;
    }
    if (a.both) throw InvalidArgument("--both applies to rational points only");
    const ExpansionResult r = detect_period(p, max_iterations(a.max_iter));
    out << (json ? to_json(r).dump() : periodic_text(r)) << '\n';
}

// --- tree -------------------------------------------------------------------

struct TreeArgs {
    std::optional<std::string> root;
    unsigned depth = 2;
    std::optional<std::string> cmax;
    bool dot = false;
    std::string format = "jsonl";
};

Json node_json(const TreeNode& n) {
    Json j = to_json(n.triple);
    j["path"] = to_json(n.path);
    j["root"] = triple_key(n.root);
    return j;
}

void write_tree_dot(const std::vector<TreeNode>& nodes, std::ostream& out) {
    std::map<std::pair<std::string, std::string>, std::string> id_of;  // (root, path) -> triple
    out << "digraph berggren {\n";
    for (const TreeNode& n : nodes) {
        const std::string id = triple_key(n.triple);
        const std::string root = triple_key(n.root);
        id_of[{root, compact(n.path)}] = id;
        std::ostringstream lbl;
        lbl << n.triple;
        out << "  " << dot_quote(id) << " [label=" << dot_quote(lbl.str()) << "];\n";
    }
    for (const TreeNode& n : nodes) {
        if (n.path.empty()) continue;
        const std::string parent_path = compact(Word(n.path.begin(), n.path.end() - 1));
        const auto it = id_of.find({triple_key(n.root), parent_path});
        if (it == id_of.end()) continue;
        out << "  " << dot_quote(it->second) << " -> " << dot_quote(triple_key(n.triple))
            << " [label=" << dot_quote(label(n.path.back())) << "];\n";
    }
    out << "}\n";
}

void do_tree(const TreeArgs& a, std::ostream& out) {
    std::vector<TreeNode> nodes;
    if (a.cmax) {
        if (a.root) throw InvalidArgument("--cmax enumerates both roots; drop --root");
        const QFE c = parse_qfe(*a.cmax);
        if (!c.is_rational() || c.a().get_den() != 1) throw ParseError("--cmax must be an integer");
        nodes = enumerate_bfs_nodes(c.a().get_num());
    } else {
        std::vector<Triple> roots;
        if (a.root) {
            roots.push_back(parse_triple(*a.root));
        } else {
            roots = {root_345(), root_435()};
        }
        for (const Triple& r : roots) {
            auto t = tree(r, a.depth);
            nodes.insert(nodes.end(), t.begin(), t.end());
        }
    }

    const std::string format = a.dot ? "dot" : a.format;
    if (format == "jsonl") {
        for (const TreeNode& n : nodes) out << node_json(n).dump() << '\n';
    } else if (format == "json") {
        Json all = Json::array();
        for (const TreeNode& n : nodes) all.push_back(node_json(n));
        out << all.dump() << '\n';
    } else if (format == "csv") {
        out << "a,b,c,path,root\n";
        for (const TreeNode& n : nodes) {
            out << n.triple.a() << ',' << n.triple.b() << ',' << n.triple.c() << ',' << compact(n.path) << ','
                << n.root.a() << '-' << n.root.b() << '-' << n.root.c() << '\n';
        }
    } else if (format == "dot") {
        write_tree_dot(nodes, out);
    } else {
        for (const TreeNode& n : nodes) {
            out << std::string(2 * n.path.size(), ' ') << n.triple;
            if (!n.path.empty()) out << ' ' << label(n.path.back());
            out << '\n';
        }
    }
}

// --- descend ----------------------------------------------------------------

void do_descend(const std::string& text, const std::string& format, std::ostream& out) {
    const Triple t = parse_triple(text);
    const auto steps = descend(t);
    const Triple& bottom = steps.empty() ? t : steps.back().parent;
    const ParentStep last = parent(bottom);
    const Terminal terminal = std::get<Terminal>(last.parent);
    const auto v = terminal_vector(terminal);
    if (format == "json") {
        Json js = Json::array();
        for (const auto& s : steps) js.push_back(Json{{"parent", to_json(s.parent)}, {"digit", to_int(s.j)}});
        Json j{{"triple", to_json(t)}, {"steps", js}};
        j["terminal"] = Json{{"vector", v}, {"digit", to_int(last.j)}};
        j["expansion"] = to_json(expand_rational(t.point()));
        out << j.dump() << '\n';
        return;
    }
    Triple current = t;
    for (const auto& s : steps) {
        out << current << " = " << label(s.j) << ' ' << s.parent << '\n';
        current = s.parent;
    }
    out << current << " = " << label(last.j) << " (" << v[0] << ", " << v[1] << ", " << v[2] << ")\n";
}

// --- lagrange commands ------------------------------------------------------

void do_period(const std::string& point, const std::optional<std::string>& d,
               const std::optional<std::size_t>& max_iter, const std::string& format, std::ostream& out) {
    const CirclePoint p = parse_point(point);
    if (d) {
        Integer want;
        if (want.set_str(*d, 10) != 0) throw ParseError("--d must be an integer");
        if (p.field() != want) {
            throw InvalidArgument("point lies over D = " + p.field().get_str() + ", not " + *d);
        }
    }
    const ExpansionResult r = detect_period(p, max_iterations(max_iter));
    out << (format == "json" ? to_json(r).dump() : periodic_text(r)) << '\n';
}

void do_construct(const std::string& word, const std::string& format, std::ostream& out) {
    const PeriodicPointData pd = construct_periodic(parse_word(word));
    if (format == "json") {
        out << to_json(pd).dump() << '\n';
        return;
    }
    out << "point   " << pd.point << '\n'
        << "lambda1 " << pd.lambda1 << '\n'
        << "lambda2 " << pd.lambda2 << '\n'
        << "lambda3 " << pd.lambda3 << '\n'
        << "D       " << pd.d << '\n';
}

int do_galois(const std::string& word, const std::string& format, std::ostream& out) {
    const GaloisReport g = galois_check(parse_word(word));
    if (format == "json") {
        out << to_json(g).dump() << '\n';
    } else {
        out << "conjugate " << g.conjugate << '\n'
            << "signs     " << g.actual_signs[0] << ' ' << g.actual_signs[1] << " (expected "
            << g.expected_signs[0] << ' ' << g.expected_signs[1] << ")\n"
            << "target    " << to_string(g.target) << '\n'
            << "detected  " << periodic_text(g.detected) << '\n'
            << (g.passed() ? "pass" : "FAIL") << '\n';
    }
    return g.passed() ? 0 : 1;
}

void do_count(unsigned k, const std::string& d, const std::string& format, std::ostream& out) {
    Integer field;
    if (field.set_str(d, 10) != 0) throw ParseError("--d must be an integer");
    const NkkResult r = count_nkk(k, field);
    if (format == "json") {
        Json words = Json::array();
        for (const Word& w : r.words) words.push_back(to_json(w));
        out << Json{{"k", k}, {"d", field.get_str()}, {"count", r.count}, {"words", words}}.dump() << '\n';
        return;
    }
    out << r.count << '\n';
    for (const Word& w : r.words) out << to_string(w) << '\n';
}

void do_roots(const std::string& word, bool normalize, const std::string& format, std::ostream& out) {
    const CircularRoot r = circular_root(parse_word(word), normalize);
    if (format == "json") {
        out << to_json(r).dump() << '\n';
    } else if (format == "dot") {
        out << "digraph circular_root {\n";
        for (std::size_t i = 0; i < r.classes.size(); ++i) {
            const Vec3& v = r.classes[i].representative;
            std::ostringstream lbl;
            lbl << '[' << v[0] << ", " << v[1] << ", " << v[2] << ']';
            out << "  n" << i << " [label=" << dot_quote(lbl.str()) << "];\n";
        }
        for (const RootEdge& e : r.edges) {
            out << "  n" << e.from << " -> n" << e.to << " [label=" << dot_quote(label(e.label)) << "];\n";
        }
        out << "}\n";
    } else {
        if (r.unit) out << "unit " << r.unit->value << '\n';
        for (std::size_t i = 0; i < r.classes.size(); ++i) {
            out << i << ' ' << r.classes[i].representative << " period " << to_string(r.classes[i].period) << '\n';
        }
        for (const RootEdge& e : r.edges) out << e.from << " -> " << e.to << ' ' << label(e.label) << '\n';
    }
}

void do_mat(const std::string& name, const std::string& format, std::ostream& out) {
    const auto m = parse_mat_name(name);
    if (!m) throw ParseError("unknown matrix '" + name + "' (expected M1 M2 M3 U1 U2 U3 H)");
    if (format == "json") {
        out << to_json(mat_const(*m)).dump() << '\n';
    } else {
        out << mat_const(*m) << '\n';
    }
}

int do_selftest(const std::optional<int>& only, std::ostream& out) {
    std::vector<CriterionResult> results;
    if (only) {
        results.push_back(run_criterion(*only));
    } else {
        results = run_acceptance();
    }
    print_results(out, results, false);
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    out << passed << '/' << results.size() << " passed\n";
    return passed == static_cast<long>(results.size()) ? 0 : 1;
}

CLI::Option* add_format(CLI::App* sub, std::string& target, std::vector<std::string> allowed) {
    return sub->add_option("--format", target, "Output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for the Romik map, Berggren trees and quadratic periodic points", "romik"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    ExpandArgs ex;
    auto* expand = app.add_subcommand("expand", "Romik digit expansion of a point");
    expand->add_option("--point", ex.point, "Point \"x,y\", e.g. \"3/5,4/5\" or \"sqrt(3)/2,1/2\"")->required();
    expand->add_flag("--both", ex.both, "Both endings of a rational point");
    expand->add_option("-n", ex.n, "Emit the first N digits only");
    expand->add_option("--max-iter", ex.max_iter, "Period detection cap (default: ROMIK_MAX_ITER or 1000000)");
    add_format(expand, ex.format, {"json", "text"});

    TreeArgs tr;
    auto* tree_cmd = app.add_subcommand("tree", "Berggren trees");
    tree_cmd->add_option("--root", tr.root, "Start triple, e.g. 3,4,5 (default: both roots)");
    auto* depth = tree_cmd->add_option("--depth", tr.depth, "Depth below the root")->capture_default_str();
    tree_cmd->add_option("--cmax", tr.cmax, "Every triple with hypotenuse <= C instead")->excludes(depth);
    tree_cmd->add_flag("--dot", tr.dot, "Same as --format dot");
    add_format(tree_cmd, tr.format, {"jsonl", "json", "dot", "csv", "text"});

    std::string triple_text, descend_format = "json";
    auto* descend_cmd = app.add_subcommand("descend", "Parent chain of a primitive triple");
    descend_cmd->add_option("triple", triple_text, "a,b,c")->required();
    add_format(descend_cmd, descend_format, {"json", "text"});

    std::string period_point, period_format = "json";
    std::optional<std::string> period_d;
    std::optional<std::size_t> period_max;
    auto* period_cmd = app.add_subcommand("period", "Preperiod and period of a quadratic point");
    period_cmd->add_option("--point", period_point, "Point \"x,y\"")->required();
    period_cmd->add_option("--d", period_d, "Expected squarefree D");
    period_cmd->add_option("--max-iter", period_max, "Iteration cap (default: ROMIK_MAX_ITER or 1000000)");
    add_format(period_cmd, period_format, {"json", "text"});

    std::string word_text, word_format = "json";
    auto* construct_cmd = app.add_subcommand("construct", "Purely periodic point of a word");
    construct_cmd->add_option("--word", word_text, "Digits, e.g. 3,1")->required();
    add_format(construct_cmd, word_format, {"json", "text"});

    auto* galois_cmd = app.add_subcommand("galois", "Check the conjugate of a periodic point");
    galois_cmd->add_option("--word", word_text, "Digits, e.g. 1,2,3")->required();
    add_format(galois_cmd, word_format, {"json", "text"});

    unsigned count_k = 1;
    std::string count_d, count_format = "json";
    auto* count_cmd = app.add_subcommand("count", "Words of length k whose periodic point lies over Q(sqrt D)");
    count_cmd->add_option("--k", count_k, "Word length")->required()->check(CLI::Range(1u, 12u));
    count_cmd->add_option("--d", count_d, "Squarefree D")->required();
    add_format(count_cmd, count_format, {"json", "text"});

    std::string roots_format = "json";
    bool roots_dot = false, no_normalize = false;
    auto* roots_cmd = app.add_subcommand("roots", "Circular root of a periodic word");
    roots_cmd->add_option("--word", word_text, "Digits, e.g. 3,1")->required();
    roots_cmd->add_flag("--dot", roots_dot, "Same as --format dot");
    roots_cmd->add_flag("--no-normalize", no_normalize, "Skip unit normalization of the classes");
    add_format(roots_cmd, roots_format, {"json", "dot", "text"});

    std::string mat_name, mat_format = "json";
    auto* mat_cmd = app.add_subcommand("mat", "Print a matrix constant");
    mat_cmd->add_option("name", mat_name, "M1 M2 M3 U1 U2 U3 H")->required();
    add_format(mat_cmd, mat_format, {"json", "text"});

    std::optional<int> only;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_cmd->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "romik: " << e.what() << '\n';
        return 2;
    }

    try {
        if (expand->parsed()) {
            do_expand(ex, out);
        } else if (tree_cmd->parsed()) {
            do_tree(tr, out);
        } else if (descend_cmd->parsed()) {
            do_descend(triple_text, descend_format, out);
        } else if (period_cmd->parsed()) {
            do_period(period_point, period_d, period_max, period_format, out);
        } else if (construct_cmd->parsed()) {
            do_construct(word_text, word_format, out);
        } else if (galois_cmd->parsed()) {
            return do_galois(word_text, word_format, out);
        } else if (count_cmd->parsed()) {
            do_count(count_k, count_d, count_format, out);
        } else if (roots_cmd->parsed()) {
            do_roots(word_text, !no_normalize, roots_dot ? "dot" : roots_format, out);
        } else if (mat_cmd->parsed()) {
            do_mat(mat_name, mat_format, out);
        } else if (selftest_cmd->parsed()) {
            return do_selftest(only, out);
        }
    } catch (const ParseError& e) {
        err << "romik: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "romik: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace romik::cli
