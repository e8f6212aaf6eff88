// Command-line front end: validation, string/band enumeration, Hom/Ext
// queries with witnesses, AR sequences, the linear-algebra cross-check, and
// the surface-triangulation tools. Output is deterministic; `--format
// records` emits one JSON object per line for scripting and golden tests.
//
// Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 check failed.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gentle/ar.hpp"
#include "gentle/homext.hpp"
#include "gentle/io.hpp"
#include "gentle/oracle.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"
#include "gentle/surface.hpp"

using json = nlohmann::ordered_json;
using namespace gentle;

namespace {

struct Options {
    std::string format = "table";
    bool records() const { return format == "records"; }
};

void add_format(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "records"}))
        ->capture_default_str();
}

std::string format_segment(const Presentation& p, const StringWord& w, int from, int to) {
    if (from == to) return "1_" + p.vertex_name(walk_vertices(p, w)[static_cast<size_t>(from)]);
    std::vector<Letter> ls(w.letters().begin() + from, w.letters().begin() + to);
    return format_string(p, StringWord::word(std::move(ls)));
}

json triple_json(const Presentation& p, const StringWord& w, int i, int j) {
    return json{{"word", format_string(p, w)},
                {"i", i},
                {"j", j},
                {"D", format_segment(p, w, 0, i)},
                {"E", format_segment(p, w, i, j)},
                {"F", format_segment(p, w, j, w.length())}};
}

std::string triple_text(const Presentation& p, const StringWord& w, int i, int j) {
    return "(" + format_segment(p, w, 0, i) + "|" + format_segment(p, w, i, j) + "|" +
           format_segment(p, w, j, w.length()) + ")";
}

json witness_json(const Presentation& p, const ExtensionWitness& w) {
    json out;
    switch (w.kind) {
        case ExtensionWitness::Kind::E1:
            out["kind"] = "E1";
            break;
        case ExtensionWitness::Kind::E2:
            out["kind"] = "E2";
            break;
        case ExtensionWitness::Kind::E3:
            out["kind"] = "E3";
            break;
    }
    if (w.kind == ExtensionWitness::Kind::E3) {
        const AdPair& pr = *w.pair;
        out["factor"] = triple_json(p, pr.x, pr.i, pr.j);
        out["sub"] = triple_json(p, pr.y, pr.k, pr.l);
        out["orientation"] = pr.trivial_middle
                                 ? "trivial"
                                 : (pr.orient == Orientation::Same ? "same" : "reversed");
    } else {
        out["arrow"] = p.arrow(w.arrow).name;
        out["second"] = w.second_inverted ? "inverse" : "plain";
        out["glued"] = format_string(p, w.glued);
    }
    return out;
}

std::string witness_text(const Presentation& p, const ExtensionWitness& w) {
    if (w.kind == ExtensionWitness::Kind::E3) {
        const AdPair& pr = *w.pair;
        std::string orient = pr.trivial_middle
                                 ? "trivial"
                                 : (pr.orient == Orientation::Same ? "same" : "reversed");
        return "witness=E3 factor=" + triple_text(p, pr.x, pr.i, pr.j) +
               " sub=" + triple_text(p, pr.y, pr.k, pr.l) + " orientation=" + orient;
    }
    std::string kind = w.kind == ExtensionWitness::Kind::E1 ? "E1" : "E2";
    return "witness=" + kind + " arrow=" + p.arrow(w.arrow).name +
           " second=" + (w.second_inverted ? "inverse" : "plain") +
           " glued=" + format_string(p, w.glued);
}

std::string dims_text(const Presentation& p, const StringWord& w) {
    std::vector<int> d = dimension_vector(p, w);
    std::string out = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

int run_validate(const std::string& file, const Options& opt) {
    Presentation p = load_presentation(file);
    const ValidationReport& r = p.report();
    if (opt.records()) {
        json v = json::array();
        for (const Violation& x : r.violations)
            v.push_back({{"rule", x.rule}, {"witness", x.witness}});
        std::cout << json{{"gentle", r.gentle},
                          {"string_algebra", r.string_algebra},
                          {"finite_dimensional", r.finite_dimensional},
                          {"violations", v}}
                  << "\n";
        return 0;
    }
    std::cout << "gentle=" << (r.gentle ? "true" : "false")
              << " string_algebra=" << (r.string_algebra ? "true" : "false")
              << " finite_dimensional=" << (r.finite_dimensional ? "true" : "false")
              << " violations=" << r.violations.size() << "\n";
    for (const Violation& x : r.violations)
        std::cout << "violation " << x.rule << ": " << x.witness << "\n";
    return 0;
}

int run_strings(const std::string& file, int max_len, bool bands, const Options& opt) {
    Presentation p = load_presentation(file);
    auto words = bands ? enumerate_bands(p, max_len) : enumerate_strings(p, max_len);
    for (size_t i = 0; i < words.size(); ++i) {
        if (opt.records())
            std::cout << json{{"index", i},
                              {"length", words[i].length()},
                              {"string", format_string(p, words[i])}}
                      << "\n";
        else
            std::cout << format_string(p, words[i]) << "\n";
    }
    if (!opt.records()) std::cout << "count=" << words.size() << "\n";
    return 0;
}

int run_hom(const std::string& file, const std::string& wt, const std::string& vt,
            const Options& opt) {
    Presentation p = load_presentation(file);
    StringWord w = parse_string_literal(p, wt), v = parse_string_literal(p, vt);
    if (!is_valid_string(p, w) || !is_valid_string(p, v))
        throw PreconditionError("argument is not a valid string");
    int d = hom_dim_combinatorial(p, w, v);
    if (opt.records())
        std::cout << json{{"w", wt}, {"v", vt}, {"hom_dim", d}} << "\n";
    else
        std::cout << "hom_dim=" << d << "\n";
    return 0;
}

int run_ext_pair(const Presentation& p, const StringWord& w, const StringWord& v,
                 const Options& opt) {
    auto witness = has_extension(p, w, v);
    if (opt.records()) {
        json rec{{"w", format_string(p, w)},
                 {"v", format_string(p, v)},
                 {"ext", witness.has_value()},
                 {"witness", witness ? witness_json(p, *witness) : json(nullptr)}};
        std::cout << rec << "\n";
    } else if (witness) {
        std::cout << "ext=true " << witness_text(p, *witness) << "\n";
    } else {
        std::cout << "ext=false\n";
    }
    return 0;
}

int run_ext(const std::string& file, const std::vector<std::string>& words, int max_len,
            const Options& opt) {
    Presentation p = load_presentation(file);
    if (!p.gentle())
        throw PreconditionError("NotGentle: the extension criterion needs a gentle algebra");
    if (words.size() == 2) {
        StringWord w = parse_string_literal(p, words[0]), v = parse_string_literal(p, words[1]);
        if (!is_valid_string(p, w) || !is_valid_string(p, v))
            throw PreconditionError("argument is not a valid string");
        return run_ext_pair(p, w, v, opt);
    }
    if (!words.empty()) throw PreconditionError("ext takes two strings, or none with --max-len");
    auto all = enumerate_strings(p, max_len);
    ExtTable t = ext_table(p, all);
    if (opt.records()) {
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                std::cout << json{{"w", format_string(p, all[i])},
                                  {"v", format_string(p, all[j])},
                                  {"ext", (bool)t.ext[i][j]},
                                  {"witness", t.witness[i][j] ? witness_json(p, *t.witness[i][j])
                                                              : json(nullptr)}}
                          << "\n";
        return 0;
    }
    std::cout << "# strings\n";
    for (size_t i = 0; i < all.size(); ++i)
        std::cout << i << ": " << format_string(p, all[i]) << "\n";
    std::cout << "# ext matrix: row w, column v, 1 iff Ext^1(M(w),M(v)) != 0\n";
    for (size_t i = 0; i < all.size(); ++i) {
        std::cout << i << ": ";
        for (size_t j = 0; j < all.size(); ++j) std::cout << (t.ext[i][j] ? '1' : '0');
        std::cout << "\n";
    }
    return 0;
}

int run_exceptional(const std::string& file, const std::vector<std::string>& words, int max_len,
                    const Options& opt) {
    Presentation p = load_presentation(file);
    if (!p.gentle())
        throw PreconditionError("NotGentle: the extension criterion needs a gentle algebra");
    std::vector<StringWord> targets;
    if (words.empty())
        targets = enumerate_strings(p, max_len);
    else
        for (const std::string& t : words) {
            StringWord w = parse_string_literal(p, t);
            if (!is_valid_string(p, w)) throw PreconditionError("argument is not a valid string");
            targets.push_back(w);
        }
    for (const StringWord& w : targets) {
        bool exc = is_exceptional(p, w);
        if (opt.records())
            std::cout << json{{"string", format_string(p, w)}, {"exceptional", exc}} << "\n";
        else
            std::cout << format_string(p, w) << " exceptional=" << (exc ? "true" : "false")
                      << "\n";
    }
    return 0;
}

int run_ar(const std::string& file, const std::string& wt, const Options& opt) {
    Presentation p = load_presentation(file);
    if (!p.gentle()) throw PreconditionError("NotGentle: AR operations need a gentle algebra");
    StringWord w = parse_string_literal(p, wt);
    if (!is_valid_string(p, w)) throw PreconditionError("argument is not a valid string");
    SignAssignment s = assign_signs(p);
    auto seq = ar_sequence(p, s, w);
    if (!seq) throw PreconditionError("Undefined: M(" + wt + ") is injective");
    if (opt.records()) {
        json mid = json::array();
        for (const StringWord& m : seq->middle)
            mid.push_back({{"string", format_string(p, m)}, {"dims", dims_text(p, m)}});
        std::cout << json{{"left", format_string(p, seq->left)},
                          {"left_dims", dims_text(p, seq->left)},
                          {"middle", mid},
                          {"right", format_string(p, seq->right)},
                          {"right_dims", dims_text(p, seq->right)}}
                  << "\n";
        return 0;
    }
    std::cout << "0 -> M(" << format_string(p, seq->left) << ")";
    std::cout << " -> ";
    for (size_t i = 0; i < seq->middle.size(); ++i) {
        if (i) std::cout << " (+) ";
        std::cout << "M(" << format_string(p, seq->middle[i]) << ")";
    }
    std::cout << " -> M(" << format_string(p, seq->right) << ") -> 0\n";
    std::cout << "dims: " << dims_text(p, seq->left) << " -> ";
    for (size_t i = 0; i < seq->middle.size(); ++i) {
        if (i) std::cout << " + ";
        std::cout << dims_text(p, seq->middle[i]);
    }
    std::cout << " -> " << dims_text(p, seq->right) << "\n";
    return 0;
}

int run_oracle(const std::string& file, int max_len, const std::string& check,
               const Options& opt) {
    Presentation p = load_presentation(file);
    OracleCache cache(p);
    auto all = enumerate_strings(p, max_len);
    long long pairs = 0, mismatches = 0;
    auto report = [&](const std::string& kind, const StringWord& w, const StringWord& v,
                      const std::string& lhs, const std::string& rhs) {
        ++mismatches;
        if (opt.records())
            std::cout << json{{"check", kind},
                              {"w", format_string(p, w)},
                              {"v", format_string(p, v)},
                              {"combinatorial", lhs},
                              {"oracle", rhs}}
                      << "\n";
        else
            std::cout << "mismatch " << kind << " w=" << format_string(p, w)
                      << " v=" << format_string(p, v) << " combinatorial=" << lhs
                      << " oracle=" << rhs << "\n";
    };
    if (check == "hom") {
        for (const StringWord& w : all)
            for (const StringWord& v : all) {
                ++pairs;
                int c = hom_dim_combinatorial(p, w, v);
                int o = cache.hom_dim(w, v);
                if (c != o) report("hom", w, v, std::to_string(c), std::to_string(o));
            }
    } else if (check == "ext") {
        if (!p.gentle())
            throw PreconditionError("NotGentle: the extension criterion needs a gentle algebra");
        for (const StringWord& w : all)
            for (const StringWord& v : all) {
                ++pairs;
                bool c = ext_nonzero(p, w, v);
                bool o = cache.ext1_dim(w, v) > 0;
                if (c != o) report("ext", w, v, c ? "true" : "false", o ? "true" : "false");
            }
    } else {  // ar
        if (!p.gentle()) throw PreconditionError("NotGentle: AR operations need a gentle algebra");
        SignAssignment s = assign_signs(p);
        for (const StringWord& w : all) {
            if (is_injective(p, w)) continue;
            ++pairs;
            auto seq = ar_sequence(p, s, w);
            if (!seq) {
                report("ar", w, w, "undefined", "non-injective");
                continue;
            }
            std::vector<int> lhs = dimension_vector(p, w);
            std::vector<int> rhs = dimension_vector(p, seq->right);
            for (size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
            std::vector<int> mid(lhs.size(), 0);
            for (const StringWord& m : seq->middle) {
                std::vector<int> md = dimension_vector(p, m);
                for (size_t i = 0; i < md.size(); ++i) mid[i] += md[i];
            }
            if (lhs != mid) {
                report("ar", w, seq->right, "dims", "additivity");
                continue;
            }
            if (cache.ext1_dim(seq->right, w) < 1) report("ar", seq->right, w, ">=1", "0");
        }
    }
    if (opt.records())
        std::cout << json{{"check", check}, {"pairs", pairs}, {"mismatches", mismatches}} << "\n";
    else
        std::cout << "pairs=" << pairs << " mismatches=" << mismatches << "\n";
    return mismatches == 0 ? 0 : 4;
}

int run_surface_build(const std::string& file, const Options& opt) {
    SurfaceAlgebra sa = algebra_from_triangulation(load_triangulation(file));
    if (opt.records()) {
        json arrows = json::array();
        for (int a = 0; a < sa.pres.n_arrows(); ++a)
            arrows.push_back({{"name", sa.pres.arrow(a).name},
                              {"src", sa.pres.vertex_name(sa.pres.arrow(a).src)},
                              {"tgt", sa.pres.vertex_name(sa.pres.arrow(a).tgt)},
                              {"triangle", sa.origins[static_cast<size_t>(a)].triangle}});
        json rels = json::array();
        for (const auto& r : sa.pres.relations())
            rels.push_back({sa.pres.arrow(r.first).name, sa.pres.arrow(r.second).name});
        std::cout << json{{"vertices", sa.pres.quiver().vertices},
                          {"arrows", arrows},
                          {"relations", rels},
                          {"gentle", sa.pres.gentle()}}
                  << "\n";
        return 0;
    }
    print_presentation(sa.pres, std::cout);
    return 0;
}

int run_surface_string(const std::string& file, const std::string& record_text,
                       const Options& opt) {
    SurfaceAlgebra sa = algebra_from_triangulation(load_triangulation(file));
    CurveRecord rec = parse_curve_record(sa.tri, record_text, 1);
    ConditionReport rep = require_consistent(sa, rec);
    if (opt.records()) {
        std::cout << json{{"string", format_string(sa.pres, rep.word)},
                          {"dims", dims_text(sa.pres, rep.word)},
                          {"exceptional", is_exceptional(sa.pres, rep.word)}}
                  << "\n";
        return 0;
    }
    std::cout << "string=" << format_string(sa.pres, rep.word)
              << " dims=" << dims_text(sa.pres, rep.word) << "\n";
    return 0;
}

int run_surface_audit(const std::string& file, const std::string& dataset_path, int max_len,
                      const Options& opt) {
    SurfaceAlgebra sa = algebra_from_triangulation(load_triangulation(file));
    auto dataset = load_dataset(sa.tri, dataset_path);
    AuditReport audit = theorem2_audit(sa, dataset, max_len);
    if (opt.records()) {
        json a = json::array(), b = json::array(), c = json::array(), d = json::array();
        for (const auto& [rec, w] : audit.violations_a)
            a.push_back({{"record", rec}, {"string", format_string(sa.pres, w)}});
        for (const auto& [i, j] : audit.violations_b) b.push_back({{"record", i}, {"other", j}});
        for (const auto& [rec, w] : audit.collisions_c)
            c.push_back({{"record", rec}, {"string", format_string(sa.pres, w)}});
        for (const auto& [u, v] : audit.collisions_d)
            d.push_back(
                {{"first", format_string(sa.pres, u)}, {"second", format_string(sa.pres, v)}});
        std::cout << json{{"strings_checked", audit.strings_checked},
                          {"violations_a", a},
                          {"violations_b", b},
                          {"nonexceptional_collisions", c},
                          {"exceptional_nonarc_collisions", d},
                          {"ok", audit.ok()}}
                  << "\n";
    } else {
        std::cout << "strings_checked=" << audit.strings_checked << "\n";
        std::cout << "violations_a=" << audit.violations_a.size() << "\n";
        for (const auto& [rec, w] : audit.violations_a)
            std::cout << "  record " << rec << " collides with " << format_string(sa.pres, w)
                      << "\n";
        std::cout << "violations_b=" << audit.violations_b.size() << "\n";
        if (audit.collisions_c.empty()) {
            std::cout << "nonexceptional_collisions: none found at this bound\n";
        } else {
            std::cout << "nonexceptional_collisions=" << audit.collisions_c.size() << "\n";
            for (const auto& [rec, w] : audit.collisions_c)
                std::cout << "  record " << rec << " vector also realized by non-exceptional "
                          << format_string(sa.pres, w) << "\n";
        }
        std::cout << "exceptional_nonarc_collisions=" << audit.collisions_d.size() << "\n";
        for (const auto& [u, v] : audit.collisions_d)
            std::cout << "  " << format_string(sa.pres, u) << " ~ " << format_string(sa.pres, v)
                      << "\n";
        std::cout << (audit.ok() ? "audit=pass" : "audit=fail") << "\n";
    }
    return audit.ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string combinatorics over gentle algebras"};
    app.require_subcommand(1);

    Options opt;
    std::string file, dataset, check = "ext", record_text, w_text, v_text;
    std::vector<std::string> words;
    int max_len = 6;
    int audit_len = 8;

    auto* validate_cmd = app.add_subcommand("validate", "validate a presentation");
    validate_cmd->add_option("file", file)->required();
    add_format(validate_cmd, opt);

    auto* strings_cmd = app.add_subcommand("strings", "enumerate canonical strings");
    strings_cmd->add_option("file", file)->required();
    strings_cmd->add_option("--max-len", max_len, "length bound")->capture_default_str();
    add_format(strings_cmd, opt);

    auto* bands_cmd = app.add_subcommand("bands", "enumerate bands");
    bands_cmd->add_option("file", file)->required();
    bands_cmd->add_option("--max-len", max_len, "length bound")->capture_default_str();
    add_format(bands_cmd, opt);

    auto* hom_cmd = app.add_subcommand("hom", "Hom-space dimension of a pair");
    hom_cmd->add_option("file", file)->required();
    hom_cmd->add_option("w", w_text)->required();
    hom_cmd->add_option("v", v_text)->required();
    add_format(hom_cmd, opt);

    auto* ext_cmd = app.add_subcommand("ext", "extension test; with no strings, the full table");
    ext_cmd->add_option("file", file)->required();
    ext_cmd->add_option("words", words, "two string literals");
    ext_cmd->add_option("--max-len", max_len, "length bound for the table")->capture_default_str();
    add_format(ext_cmd, opt);

    auto* exc_cmd = app.add_subcommand("exceptional", "self-extension test");
    exc_cmd->add_option("file", file)->required();
    exc_cmd->add_option("words", words, "string literals; default sweeps --max-len");
    exc_cmd->add_option("--max-len", max_len, "length bound for the sweep")->capture_default_str();
    add_format(exc_cmd, opt);

    auto* ar_cmd = app.add_subcommand("ar", "AR sequence starting at M(w)");
    ar_cmd->add_option("file", file)->required();
    ar_cmd->add_option("w", w_text)->required();
    add_format(ar_cmd, opt);

    auto* oracle_cmd = app.add_subcommand("oracle", "cross-check against exact linear algebra");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--max-len", max_len, "length bound")->capture_default_str();
    oracle_cmd->add_option("--check", check, "hom | ext | ar")
        ->check(CLI::IsMember({"hom", "ext", "ar"}))
        ->capture_default_str();
    add_format(oracle_cmd, opt);

    auto* sb_cmd = app.add_subcommand("surface-build", "gentle algebra of a triangulation");
    sb_cmd->add_option("file", file)->required();
    add_format(sb_cmd, opt);

    auto* ss_cmd = app.add_subcommand("surface-string", "string of a curve record");
    ss_cmd->add_option("file", file)->required();
    ss_cmd->add_option("record", record_text, "one dataset line")->required();
    add_format(ss_cmd, opt);

    auto* sa_cmd = app.add_subcommand("surface-audit", "dimension-vector determinacy audit");
    sa_cmd->add_option("file", file)->required();
    sa_cmd->add_option("--dataset", dataset, "curve dataset file")->required();
    sa_cmd->add_option("--max-len", audit_len, "length bound")->capture_default_str();
    add_format(sa_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(file, opt);
        if (strings_cmd->parsed()) return run_strings(file, max_len, false, opt);
        if (bands_cmd->parsed()) return run_strings(file, max_len, true, opt);
        if (hom_cmd->parsed()) return run_hom(file, w_text, v_text, opt);
        if (ext_cmd->parsed()) return run_ext(file, words, max_len, opt);
        if (exc_cmd->parsed()) return run_exceptional(file, words, max_len, opt);
        if (ar_cmd->parsed()) return run_ar(file, w_text, opt);
        if (oracle_cmd->parsed()) return run_oracle(file, max_len, check, opt);
        if (sb_cmd->parsed()) return run_surface_build(file, opt);
        if (ss_cmd->parsed()) return run_surface_string(file, record_text, opt);
        if (sa_cmd->parsed()) return run_surface_audit(file, dataset, audit_len, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CheckError& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
