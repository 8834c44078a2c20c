// vk: command line front end for the virtual knot calculus library.
//
// Exit codes: 0 success, 1 domain error (invalid code, failed verification,
// unknown catalog name), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vk/cobordism.hpp"
#include "vk/constructions.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/surface.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CatalogEntry {
    std::string name;
    vk::KnotCode code;
    std::string provenance;  // "builtin" or "imported(<file>:<line>)"
};

const std::pair<const char*, const char*> kBuiltins[] = {
    {"unknot", ""},
    {"trefoil", "O1+ U2+ O3+ U1+ O2+ U3+"},
    {"figure-8", "O1+ U2+ O3- U4- O2+ U1+ O4- U3-"},
    {"virtual-trefoil", "O1+ O2+ U1+ U2+"},
    {"kishino", "O2- U1+ U2- O1+ O4+ U3- U4+ O3-"},
};

std::filesystem::path catalog_dir() {
    if (const char* env = std::getenv("VK_CATALOG")) return env;
    return ".";
}

std::filesystem::path catalog_file() { return catalog_dir() / "catalog.txt"; }

// Parses one "name: code" record. Returns nullopt for blank/comment lines.
std::optional<std::pair<std::string, std::string>> catalog_record(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    auto colon = body.find(':');
    if (body.find_first_not_of(" \t\r") == std::string::npos) return std::nullopt;
    if (colon == std::string::npos)
        throw vk::Error(vk::ErrorKind::SyntaxError, "expected 'name: code'");
    auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t\r");
        auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string name = trim(body.substr(0, colon));
    if (name.empty() || name.find_first_of(" \t@") != std::string::npos)
        throw vk::Error(vk::ErrorKind::SyntaxError, "bad catalog name '" + name + "'");
    return std::pair{name, trim(body.substr(colon + 1))};
}

std::vector<CatalogEntry> load_catalog() {
    std::vector<CatalogEntry> entries;
    for (auto [name, code] : kBuiltins)
        entries.push_back({name, vk::parse_knot(code), "builtin"});
    std::ifstream in(catalog_file());
    std::string line;
    for (int lineno = 1; in && std::getline(in, line); ++lineno) {
        auto rec = catalog_record(line);
        if (!rec) continue;
        entries.push_back({rec->first, vk::parse_knot(rec->second),
                           "imported(" + catalog_file().string() + ":" + std::to_string(lineno) +
                               ")"});
    }
    return entries;
}

// Resolves a positional code argument: "@name" looks in the catalog,
// anything else parses as an inline Gauss code.
vk::KnotCode knot_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::string name = text.substr(1);
        for (const CatalogEntry& e : load_catalog())
            if (e.name == name) return e.code;
        throw vk::Error(vk::ErrorKind::UnknownId, "no catalog entry named '" + name + "'");
    }
    return vk::parse_knot(text);
}

vk::LinkCode link_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') return knot_arg(text).as_link();
    return vk::parse_link(text);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vk::Error(vk::ErrorKind::SyntaxError, "cannot read file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool g_json = false;
json g_doc;

void emit(const json& doc, const std::string& plain) {
    if (g_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << plain;
}

json knot_invariants(const vk::KnotCode& k) {
    vk::ACAlexander ac = vk::ac_alexander(k);
    return {{"crossings", k.crossing_count()},
            {"genus", vk::carter_genus(k)},
            {"almost-classical", vk::is_almost_classical(k)},
            {"odd-writhe", vk::odd_writhe(k)},
            {"writhe-polynomial", vk::writhe_polynomial(k).to_string()},
            {"alexander", ac.poly.to_string()},
            {"principal", ac.principal},
            {"galexander", vk::generalized_alexander(k).to_string()}};
}

std::string invariants_text(const json& inv) {
    std::ostringstream out;
    for (auto& [key, value] : inv.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
    return out.str();
}

int import_table(const std::string& path, bool lenient) {
    std::vector<CatalogEntry> existing = load_catalog();
    std::istringstream in(slurp(path));
    std::string line;
    std::vector<std::pair<std::string, std::string>> accepted;
    int rejected = 0;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        try {
            auto rec = catalog_record(line);
            if (!rec) continue;
            vk::KnotCode code = vk::parse_knot(rec->second);
            for (const CatalogEntry& e : existing)
                if (e.name == rec->first)
                    throw vk::Error(vk::ErrorKind::BadComponent,
                                    "duplicate catalog name '" + rec->first + "'");
            for (auto& [name, text] : accepted)
                if (name == rec->first)
                    throw vk::Error(vk::ErrorKind::BadComponent,
                                    "duplicate catalog name '" + rec->first + "'");
            accepted.push_back({rec->first, vk::serialize(code)});
        } catch (const vk::Error& e) {
            std::cerr << path << ":" << lineno << ": " << e.what() << "\n";
            if (!lenient) throw;
            ++rejected;
        }
    }
    std::filesystem::create_directories(catalog_dir());
    std::ofstream out(catalog_file(), std::ios::app);
    for (auto& [name, text] : accepted) out << name << ": " << text << "\n";
    emit(json{{"imported", accepted.size()}, {"rejected", rejected}},
         "imported " + std::to_string(accepted.size()) + " entries\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot calculus on signed Gauss codes"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "structured single-document output");

    std::string code_text, other_text, kind, file, tangle_file, name;
    std::size_t gap_a = 0, gap_b = 0, arc1 = 0, arc2 = 0;
    bool canonical = false, lenient = false;

    CLI::App* parse = app.add_subcommand("parse", "validate a code and echo it back");
    parse->add_option("code", code_text, "Gauss code or @name")->required();
    parse->add_flag("--canonical", canonical, "print the canonical form");

    CLI::App* genus = app.add_subcommand("genus", "genus of the Carter surface");
    genus->add_option("code", code_text)->required();

    CLI::App* ac = app.add_subcommand("ac", "almost classical test");
    ac->add_option("code", code_text)->required();

    CLI::App* inv = app.add_subcommand("invariant", "compute one invariant");
    inv->add_option("kind", kind, "odd-writhe | writhe-poly | alexander | galexander")
        ->required()
        ->check(CLI::IsMember({"odd-writhe", "writhe-poly", "alexander", "galexander"}));
    inv->add_option("code", code_text)->required();

    CLI::App* sum = app.add_subcommand("connect-sum", "connected sum at chosen gaps");
    sum->add_option("a", code_text)->required();
    sum->add_option("gap-a", gap_a)->required();
    sum->add_option("b", other_text)->required();
    sum->add_option("gap-b", gap_b)->required();

    CLI::App* splice = app.add_subcommand("splice", "splice a tangle across two arcs");
    splice->add_option("code", code_text)->required();
    splice->add_option("arc1", arc1)->required();
    splice->add_option("arc2", arc2)->required();
    splice->add_option("--tangle", tangle_file, "tangle file (default: built-in KT tangle)");

    CLI::App* sat = app.add_subcommand("satellite", "Livingston-pattern 2-cable satellite");
    sat->add_option("code", code_text)->required();

    CLI::App* movie = app.add_subcommand("movie", "concordance movies");
    CLI::App* verify = movie->add_subcommand("verify", "check a movie file");
    verify->add_option("file", file)->required();

    CLI::App* slice = app.add_subcommand("slice-check", "concordance obstructions");
    slice->add_option("code", code_text)->required();

    CLI::App* catalog = app.add_subcommand("catalog", "named knot table");
    CLI::App* list = catalog->add_subcommand("list", "list all entries");
    CLI::App* show = catalog->add_subcommand("show", "entry with its invariants");
    show->add_option("name", name)->required();
    CLI::App* import = catalog->add_subcommand("import", "add entries from a table file");
    import->add_option("file", file)->required();
    import->add_flag("--lenient", lenient, "skip bad lines instead of failing");
    catalog->require_subcommand(1);
    movie->require_subcommand(1);

    try {
        app.parse(argc, argv);

        if (*parse) {
            vk::LinkCode l = link_arg(code_text);
            vk::LinkCode out = canonical ? vk::canonicalize(l) : l;
            emit(json{{"code", vk::serialize(l)},
                      {"canonical", vk::serialize(vk::canonicalize(l))},
                      {"crossings", l.crossing_count()},
                      {"components", l.component_count()}},
                 vk::serialize(out) + "\n");
        } else if (*genus) {
            int g = vk::carter_genus(link_arg(code_text));
            emit(json{{"genus", g}}, std::to_string(g) + "\n");
        } else if (*ac) {
            bool flag = vk::is_almost_classical(knot_arg(code_text));
            emit(json{{"almost-classical", flag}}, flag ? "true\n" : "false\n");
        } else if (*inv) {
            if (kind == "odd-writhe") {
                int v = vk::odd_writhe(knot_arg(code_text));
                emit(json{{"odd-writhe", v}}, std::to_string(v) + "\n");
            } else if (kind == "writhe-poly") {
                std::string v = vk::writhe_polynomial(knot_arg(code_text)).to_string();
                emit(json{{"writhe-polynomial", v}}, v + "\n");
            } else if (kind == "alexander") {
                vk::LinkCode l = link_arg(code_text);
                if (l.is_knot()) {
                    vk::ACAlexander a = vk::ac_alexander(l.as_knot());
                    emit(json{{"alexander", a.poly.to_string()}, {"principal", a.principal}},
                         a.poly.to_string() + "\nprincipal: " +
                             (a.principal ? "true" : "false") + "\n");
                } else {
                    std::string v = vk::link_alexander(l).to_string();
                    emit(json{{"alexander", v}}, v + "\n");
                }
            } else {
                std::string v = vk::generalized_alexander(knot_arg(code_text)).to_string();
                emit(json{{"galexander", v}}, v + "\n");
            }
        } else if (*sum) {
            vk::KnotCode c =
                vk::connected_sum(knot_arg(code_text), gap_a, knot_arg(other_text), gap_b);
            emit(json{{"code", vk::serialize(c)}}, vk::serialize(c) + "\n");
        } else if (*splice) {
            vk::TangleWord t =
                tangle_file.empty() ? vk::kt_tangle() : vk::parse_tangle(slurp(tangle_file));
            vk::KnotCode c = vk::tangle_splice(knot_arg(code_text), arc1, arc2, t);
            emit(json{{"code", vk::serialize(c)}}, vk::serialize(c) + "\n");
        } else if (*sat) {
            vk::KnotCode c = vk::livingston_satellite(knot_arg(code_text));
            emit(json{{"code", vk::serialize(c)}}, vk::serialize(c) + "\n");
        } else if (*verify) {
            vk::MovieFile mf = vk::parse_movie(slurp(file));
            vk::Certificate cert = vk::verify_movie(mf.movie, mf.from, mf.to);
            std::ostringstream out;
            out << "births=" << cert.births << " saddles=" << cert.saddles
                << " deaths=" << cert.deaths << " ok=true\n";
            emit(json{{"births", cert.births},
                      {"saddles", cert.saddles},
                      {"deaths", cert.deaths},
                      {"lifelines", cert.lifelines},
                      {"ok", true}},
                 out.str());
        } else if (*slice) {
            vk::SliceReport rep = vk::slice_obstructions(knot_arg(code_text));
            json items = json::array();
            std::ostringstream out;
            for (const vk::SliceObstruction& it : rep.items) {
                items.push_back(
                    {{"name", it.name}, {"value", it.value}, {"obstructs", it.obstructs}});
                out << it.name << " " << it.value << " "
                    << (it.obstructs ? "obstructs" : "passes") << "\n";
            }
            out << "verdict " << (rep.not_slice ? "not-slice" : "inconclusive") << "\n";
            emit(json{{"obstructions", items}, {"not-slice", rep.not_slice}}, out.str());
        } else if (*list) {
            json rows = json::array();
            std::ostringstream out;
            for (const CatalogEntry& e : load_catalog()) {
                rows.push_back({{"name", e.name},
                                {"code", vk::serialize(e.code)},
                                {"provenance", e.provenance}});
                out << e.name << ": " << vk::serialize(e.code) << "\n";
            }
            emit(rows, out.str());
        } else if (*show) {
            for (const CatalogEntry& e : load_catalog()) {
                if (e.name != name) continue;
                json inv_doc = knot_invariants(e.code);
                json doc = {{"name", e.name},
                            {"code", vk::serialize(e.code)},
                            {"provenance", e.provenance}};
                doc.update(inv_doc);
                emit(doc, "name: " + e.name + "\ncode: " + vk::serialize(e.code) +
                              "\nprovenance: " + e.provenance + "\n" +
                              invariants_text(inv_doc));
                return 0;
            }
            throw vk::Error(vk::ErrorKind::UnknownId, "no catalog entry named '" + name + "'");
        } else if (*import) {
            return import_table(file, lenient);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const vk::Error& e) {
        if (g_json)
            std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
