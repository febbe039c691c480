/*
   Copyright 2026 The riocomb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "riocomb/error.hpp"
#include "riocomb/families.hpp"
#include "riocomb/homology.hpp"
#include "riocomb/io.hpp"
#include "riocomb/poset.hpp"
#include "riocomb/riordan.hpp"
#include "riocomb/scomplex.hpp"
#include "riocomb/verify.hpp"

namespace riocomb::cli {

namespace {

using io::Json;

struct Config {
    std::size_t trunc = 16;
    std::size_t depth = 8;
    std::size_t cap_faces = 50000;
    std::size_t cap_poset = 12;
    std::string format = "json";
    std::string out;
    std::string config;
    std::uint32_t seed = 1729;

    FamilyConfig family() const { return {depth, trunc, cap_faces, cap_poset}; }
};

// Result of one command: the document to print and whether every check held.
struct Outcome {
    Json doc;
    bool ok = true;
};

[[noreturn]] void bad_input(const std::string& what) { throw Error(Errc::InvalidParameters, what); }

std::vector<int> int_list(const std::string& text, std::size_t count, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                bad_input(what + " expects integers, got '" + text + "'");
        } catch (const std::logic_error&) {
            bad_input(what + " expects integers, got '" + text + "'");
        }
    }
    if (out.size() != count)
        bad_input(what + " expects " + std::to_string(count) + " comma separated integers");
    return out;
}

// ---- rendering -------------------------------------------------------------

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat(const Json& j)
{
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

std::string joined(const Json& arr, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i)
        s += (i ? sep : "") + scalar_text(arr[i]);
    return s;
}

void render_pretty(std::ostream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (!value.is_structured() || is_flat(value)) {
                os << pad << key << ": "
                   << (value.is_structured() ? "[" + joined(value, ", ") + "]" : scalar_text(value)) << '\n';
            } else {
                os << pad << key << ":\n";
                render_pretty(os, value, indent + 2);
            }
        }
    } else if (is_flat(j)) {
        os << pad << "[" << joined(j, ", ") << "]\n";
    } else if (j.is_array()) {
        const bool table = std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e); });
        for (const auto& e : j) {
            if (table)
                os << pad << joined(e, "  ") << '\n';
            else {
                os << pad << "-\n";
                render_pretty(os, e, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

void render_csv(std::ostream& os, const Json& j, const std::string& path)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            const std::string sub = path.empty() ? key : path + "." + key;
            if (value.is_structured()) {
                render_csv(os, value, sub);
            } else {
                os << sub << "," << scalar_text(value) << '\n';
            }
        }
    } else if (is_flat(j)) {
        if (!path.empty())
            os << "# " << path << '\n';
        os << joined(j, ",") << '\n';
    } else if (std::all_of(j.begin(), j.end(), [](const Json& e) { return is_flat(e); })) {
        if (!path.empty())
            os << "# " << path << '\n';
        for (const auto& row : j)
            os << joined(row, ",") << '\n';
    } else {
        for (std::size_t i = 0; i < j.size(); ++i)
            render_csv(os, j[i], path + "[" + std::to_string(i) + "]");
    }
}

void render(std::ostream& os, const Json& doc, const std::string& format)
{
    if (format == "json")
        os << doc.dump(2) << '\n';
    else if (format == "pretty")
        render_pretty(os, doc, 0);
    else
        render_csv(os, doc, "");
}

// ---- inputs ----------------------------------------------------------------

RiordanPair pair_arg(const std::string& token, const Config& cfg)
{
    if (token == "pascal")
        return RiordanPair::pascal(cfg.trunc);
    if (token == "identity")
        return RiordanPair::identity(cfg.trunc);
    for (const char* prefix : {"F:", "Fext:"}) {
        const std::string p(prefix);
        if (token.rfind(p, 0) == 0) {
            const auto mq = int_list(token.substr(p.size()), 2, p + "m,q");
            return p == "F:" ? matrix_F(mq[0], mq[1], cfg.trunc) : matrix_F_ext(mq[0], mq[1], cfg.trunc);
        }
    }
    Json j = io::read_json_file(token);
    if (j.is_object() && !j.contains("trunc"))
        j["trunc"] = cfg.trunc;
    return io::riordan_from_json(j);
}

PowerSeries series_arg(const std::string& token, const Config& cfg)
{
    if (token == "ones")
        return PowerSeries::polynomial({1, -1}, cfg.trunc).inverse();
    if (std::filesystem::exists(token)) {
        const Json j = io::read_json_file(token);
        const PowerSeries s = io::series_from_json(j);
        return PowerSeries::polynomial(s.coeffs(), std::max(s.trunc(), cfg.trunc));
    }
    std::vector<Rational> c;
    std::stringstream ss(token);
    std::string item;
    while (std::getline(ss, item, ','))
        c.push_back(parse_rational(item));
    if (c.empty())
        bad_input("empty series");
    return PowerSeries::polynomial(std::span<const Rational>(c), cfg.trunc);
}

std::optional<int> declared_dimension(const Json& in)
{
    if (!in.contains("dimension"))
        return std::nullopt;
    if (!in.at("dimension").is_number_integer())
        throw Error(Errc::ParseError, "\"dimension\" must be an integer");
    return in.at("dimension").get<int>();
}

void check_dimension(const std::optional<int>& declared, int actual)
{
    if (declared && *declared != actual)
        throw Error(Errc::DimensionMismatch, "declared dimension " + std::to_string(*declared) +
                                                 " but the vector has dimension " + std::to_string(actual));
}

std::optional<ExtendedFVector> f_input(const Json& in)
{
    if (in.contains("extended_f"))
        return ExtendedFVector{io::integers_from_json(in.at("extended_f"), -1)};
    if (in.contains("f"))
        return extend(FVector{io::integers_from_json(in.at("f"), 0)});
    return std::nullopt;
}

std::optional<HVector> h_input(const Json& in)
{
    if (in.contains("h"))
        return HVector{io::integers_from_json(in.at("h"), 0)};
    return std::nullopt;
}

// ---- commands --------------------------------------------------------------

Outcome cmd_fvec(const std::string& file)
{
    const SimplicialComplex k = io::complex_from_json(io::read_json_file(file));
    const FVector f = f_vector(k);
    const ExtendedFVector ef = extend(f);
    return {{{"dimension", k.dimension()},
             {"f", io::labeled(f.entries, 0)},
             {"extended_f", io::labeled(ef.entries, -1)},
             {"f_polynomial", io::to_json(ef.entries)}}};
}

Outcome cmd_transform(const std::string& kind, const std::string& file, std::optional<int> dim_flag)
{
    Json in = Json::object();
    if (!file.empty())
        in = io::read_json_file(file);
    const auto declared = dim_flag ? dim_flag : declared_dimension(in);

    if (kind == "dsbasis") {
        if (!declared)
            bad_input("dsbasis needs --dim or a \"dimension\" entry");
        Json cols = Json::array();
        for (const auto& c : ds_basis(*declared))
            cols.push_back(io::to_json(c));
        return {{{"dimension", *declared}, {"columns", cols}}};
    }
    if (file.empty())
        bad_input(kind + " needs an input file");

    if (kind == "f2h" || kind == "dscheck") {
        auto ef = f_input(in);
        if (!ef && kind == "dscheck") {
            const auto h = h_input(in);
            if (!h)
                throw Error(Errc::ParseError, "expected \"f\", \"extended_f\" or \"h\"");
            check_dimension(declared, static_cast<int>(h->entries.size()) - 2);
            ef = f_from_h(*h);
        }
        if (!ef)
            throw Error(Errc::ParseError, "expected \"f\" or \"extended_f\"");
        check_dimension(declared, ef->dimension());
        if (kind == "f2h") {
            const HVector h = h_from_f(*ef);
            return {{{"dimension", ef->dimension()}, {"h", io::labeled(h.entries, 0)}}};
        }
        const DehnSommervilleCheck ds = ds_check(*ef);
        return {{{"dimension", ef->dimension()},
                 {"satisfied", ds.satisfied},
                 {"eigenvector", ds.eigenvector},
                 {"eigen_residual", io::to_json(ds.eigen_residual)},
                 {"h", io::labeled(ds.h.entries, 0)},
                 {"h_palindromic", ds.h_palindromic}}};
    }
    if (kind == "h2g" || kind == "h2gamma") {
        const auto h = h_input(in);
        if (!h)
            throw Error(Errc::ParseError, "expected \"h\"");
        check_dimension(declared, static_cast<int>(h->entries.size()) - 2);
        if (kind == "h2g")
            return {{{"g", io::labeled(g_from_h(*h).entries, 0)}}};
        const GammaSeries g = gamma_from_h(*h);
        std::vector<Rational> head = g.entries;
        if (g.is_vector)
            head.resize(std::min(head.size(), g.vector_length));
        return {{{"gamma", io::to_json(head)}, {"is_vector", g.is_vector}, {"series", io::to_json(g.entries)}}};
    }
    bad_input("unknown transform '" + kind + "'");
}

Outcome cmd_family(int m, int q, const std::string& what, const Config& cfg)
{
    static const std::vector<std::string> kinds = {"f", "fext", "h", "b", "c", "ndet", "chi", "mu", "all"};
    if (std::find(kinds.begin(), kinds.end(), what) == kinds.end())
        bad_input("unknown family output '" + what + "'");
    if (m < 1 || q < 1)
        throw Error(Errc::InvalidParameters, "need m, q >= 1");
    if (what == "h" && (m < 2 || q < 2))
        throw Error(Errc::InvalidParameters, "the h-matrix needs m, q >= 2");

    const FamilyReport rep = build_family_report(m, q, cfg.family());
    const Json full = io::to_json(rep);
    if (what == "all")
        return {full, rep.all_pass()};

    Json doc = {{"m", m}, {"q", q}, {"depth", rep.depth}};
    auto take = [&](const char* key) {
        if (full.contains(key))
            doc[key] = full.at(key);
    };
    std::vector<std::string> prefixes;
    if (what == "f") {
        take("F");
        take("F_enumerated_rows");
        prefixes = {"f_"};
    } else if (what == "fext") {
        take("Fext");
        prefixes = {"fext_"};
    } else if (what == "h") {
        take("H");
        take("H_enumerated_rows");
        prefixes = {"h_"};
    } else if (what == "b") {
        take("B");
        prefixes = {"b_"};
    } else if (what == "c") {
        take("C");
        prefixes = {"c_"};
    } else if (what == "ndet") {
        take("Ndet");
        prefixes = {"ndet_", "b_equals"};
    } else if (what == "chi") {
        take("chi");
        prefixes = {"chi_"};
    } else {
        prefixes = {"mu_"};
    }
    Json verdicts = Json::object();
    bool ok = true;
    for (const auto& [name, pass] : rep.verdicts)
        for (const auto& p : prefixes)
            if (name.rfind(p, 0) == 0) {
                verdicts[name] = pass;
                ok = ok && pass;
            }
    doc["verdicts"] = verdicts;
    return {doc, ok};
}

Json pair_doc(const RiordanPair& p, const Config& cfg)
{
    Json j = io::to_json(p);
    j["matrix"] = io::to_json(p.finite(std::min(cfg.depth, p.trunc()) - 1));
    return j;
}

Outcome cmd_riordan(const std::string& op, const std::vector<std::string>& args, const Config& cfg)
{
    auto need = [&](std::size_t n, const char* usage) {
        if (args.size() != n)
            bad_input(std::string("usage: riordan ") + usage);
    };
    if (op == "entry") {
        need(3, "entry PAIR I J");
        const auto ij = int_list(args[1] + "," + args[2], 2, "entry");
        if (ij[0] < 0 || ij[1] < 0)
            bad_input("indices must be nonnegative");
        const RiordanPair p = pair_arg(args[0], cfg);
        return {{{"i", ij[0]}, {"j", ij[1]},
                 {"entry", io::to_json(p.entry(static_cast<std::size_t>(ij[0]), static_cast<std::size_t>(ij[1])))}}};
    }
    if (op == "mul") {
        need(2, "mul PAIR PAIR");
        return {{{"product", pair_doc(pair_arg(args[0], cfg) * pair_arg(args[1], cfg), cfg)}}};
    }
    if (op == "inv") {
        need(1, "inv PAIR");
        return {{{"inverse", pair_doc(pair_arg(args[0], cfg).inverse(), cfg)}}};
    }
    if (op == "ftrm") {
        need(2, "ftrm PAIR SERIES");
        return {{{"result", io::to_json(pair_arg(args[0], cfg).apply(series_arg(args[1], cfg)))}}};
    }
    if (op == "aseq") {
        need(1, "aseq PAIR");
        return {{{"a_sequence", io::to_json(pair_arg(args[0], cfg).a_sequence())}}};
    }
    bad_input("unknown riordan operation '" + op + "'");
}

Outcome cmd_poset(const std::string& op, const std::vector<std::string>& files, const std::string& delta,
                  const Config& cfg)
{
    std::optional<std::vector<int>> mqn;
    if (!delta.empty())
        mqn = int_list(delta, 3, "--delta m,q,n");

    if (op == "faceposet") {
        if (files.size() != 1)
            bad_input("faceposet needs one complex file");
        const SimplicialComplex k = io::complex_from_json(io::read_json_file(files[0]));
        const FinitePoset p = face_poset(k);
        return {{{"poset", io::to_json(p)}, {"faces", enumerate_faces(k)}}};
    }
    if (op == "dim") {
        if (!mqn)
            bad_input("dim is computed for the delta posets; pass --delta m,q,n");
        const DimensionRealizer r = order_dimension_realizer((*mqn)[0], (*mqn)[1], (*mqn)[2]);
        Json doc = {{"dimension", r.dimension},
                    {"verified", r.verified},
                    {"e1", r.e1.order},
                    {"e2", r.e2.order}};
        if (r.incomparable)
            doc["incomparable"] = {r.incomparable->first, r.incomparable->second};
        return {doc, r.verified};
    }

    std::vector<FinitePoset> posets;
    if (mqn)
        posets.push_back(delta_poset((*mqn)[0], (*mqn)[1], (*mqn)[2]));
    for (const auto& f : files)
        posets.push_back(io::poset_from_json(io::read_json_file(f)));

    if (op == "join") {
        if (posets.size() != 2)
            bad_input("join needs exactly two posets");
        return {{{"poset", io::to_json(nh_join(posets[0], posets[1]))}}};
    }
    if (posets.size() != 1)
        bad_input(op + " needs exactly one poset (a file or --delta)");
    const FinitePoset& x = posets[0];
    if (op == "ordercomplex") {
        const SimplicialComplex k = order_complex(x);
        return {{{"complex", io::to_json(k)}, {"f", io::labeled(f_vector(k).entries, 0)}}};
    }
    if (op == "core") {
        const CoreResult c = core_with_labels(x);
        return {{{"core", io::to_json(c.core)}, {"kept", c.kept}}};
    }
    if (op == "aut")
        return {{{"automorphisms", io::to_json(automorphism_count(x, cfg.cap_poset))}}};
    if (op == "det")
        return {{{"determinant", io::to_json(poset_determinant(x))}}};
    if (op == "height")
        return {{{"height", height(x)}}};
    if (op == "width")
        return {{{"width", width(x)}}};
    bad_input("unknown poset operation '" + op + "'");
}

Outcome cmd_verify(const std::string& suite, const Config& cfg)
{
    VerifyOptions opts;
    opts.family = cfg.family();
    opts.seed = cfg.seed;
    const VerifyReport r = run_suite(parse_suite(suite), opts);
    return {r.to_json(), r.passed()};
}

// Values from --config fill options that were not given on the command line.
void apply_config_file(CLI::App& app, Config& cfg)
{
    if (cfg.config.empty())
        return;
    const Json j = io::read_json_file(cfg.config);
    if (!j.is_object())
        throw Error(Errc::ParseError, cfg.config + ": expected a JSON object");
    auto size_field = [&](const char* key, const char* flag, std::size_t& slot) {
        if (!j.contains(key) || app.get_option(flag)->count() > 0)
            return;
        if (!j.at(key).is_number_unsigned())
            throw Error(Errc::ParseError, cfg.config + ": \"" + key + "\" must be a nonnegative integer");
        slot = j.at(key).get<std::size_t>();
    };
    size_field("trunc", "--trunc", cfg.trunc);
    size_field("depth", "--depth", cfg.depth);
    size_field("cap_faces", "--cap-faces", cfg.cap_faces);
    size_field("cap_poset", "--cap-poset", cfg.cap_poset);
    if (j.contains("seed") && app.get_option("--seed")->count() == 0) {
        if (!j.at("seed").is_number_unsigned() || j.at("seed").get<std::uint64_t>() > UINT32_MAX)
            throw Error(Errc::ParseError, cfg.config + ": \"seed\" must be a 32-bit nonnegative integer");
        cfg.seed = j.at("seed").get<std::uint32_t>();
    }
    if (j.contains("format") && app.get_option("--format")->count() == 0) {
        const std::string f = j.at("format").is_string() ? j.at("format").get<std::string>() : "";
        if (f != "json" && f != "csv" && f != "pretty")
            throw Error(Errc::ParseError, cfg.config + ": \"format\" must be json, csv or pretty");
        cfg.format = f;
    }
    for (const auto& [key, value] : j.items()) {
        static const std::vector<std::string> known = {"trunc", "depth", "cap_faces", "cap_poset", "format", "seed"};
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw Error(Errc::ParseError, cfg.config + ": unknown key \"" + key + "\"");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"riocomb: Riordan arrays, f/h-vector transforms, simplicial complexes and finite posets"};
    app.name("riocomb");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--trunc", cfg.trunc, "Series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--depth", cfg.depth, "Number of family rows")->check(CLI::PositiveNumber);
    app.add_option("--cap-faces", cfg.cap_faces, "Largest complex enumerated by brute force");
    app.add_option("--cap-poset", cfg.cap_poset, "Largest poset searched for automorphisms");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", cfg.out, "Write output to FILE");
    app.add_option("--config", cfg.config, "JSON file with defaults for the options above");
    app.add_option("--seed", cfg.seed, "Seed for the random corpora used by verify");

    std::string file;
    auto* fvec = app.add_subcommand("fvec", "f-vector and extended f-vector of a complex");
    fvec->add_option("file", file, "Complex JSON")->required();

    std::string kind;
    std::optional<int> dim;
    auto* transform = app.add_subcommand("transform", "f2h, h2g, h2gamma, dscheck, dsbasis");
    transform->add_option("kind", kind)->required()->check(CLI::IsMember({"f2h", "h2g", "h2gamma", "dscheck", "dsbasis"}));
    transform->add_option("file", file, "Vector JSON");
    transform->add_option("--dim", dim, "Dimension d");

    int m = 0;
    int q = 0;
    std::string what;
    auto* family = app.add_subcommand("family", "Matrices and identities of the iterated q-cone family");
    family->add_option("m", m)->required();
    family->add_option("q", q)->required();
    family->add_option("what", what, "f|fext|h|b|c|ndet|chi|mu|all")->required();

    std::string op;
    std::vector<std::string> rest;
    auto* riordan = app.add_subcommand("riordan", "entry, mul, inv, ftrm, aseq");
    riordan->add_option("op", op)->required();
    riordan->add_option("args", rest, "Pairs: FILE, pascal, identity, F:m,q or Fext:m,q");

    std::string delta;
    auto* poset = app.add_subcommand("poset", "join, ordercomplex, faceposet, core, aut, dim, det, height, width");
    poset->add_option("op", op)->required();
    poset->add_option("files", rest, "Poset JSON files");
    poset->add_option("--delta", delta, "Use the delta poset m,q,n");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("suite", suite, "all|families|riordan|poset|complex");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : InputError;
    }

    try {
        apply_config_file(app, cfg);
        if (cfg.trunc < cfg.depth + 2)
            throw Error(Errc::InvalidParameters, "--trunc must be at least --depth + 2");

        Outcome result;
        if (fvec->parsed())
            result = cmd_fvec(file);
        else if (transform->parsed())
            result = cmd_transform(kind, file, dim);
        else if (family->parsed())
            result = cmd_family(m, q, what, cfg);
        else if (riordan->parsed())
            result = cmd_riordan(op, rest, cfg);
        else if (poset->parsed())
            result = cmd_poset(op, rest, delta, cfg);
        else
            result = cmd_verify(suite, cfg);

        if (cfg.out.empty()) {
            render(out, result.doc, cfg.format);
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f)
                throw Error(Errc::ParseError, "cannot write " + cfg.out);
            render(f, result.doc, cfg.format);
        }
        return result.ok ? Success : VerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: ParseError: " << e.what() << '\n';
        return InputError;
    }
}

} // namespace riocomb::cli
