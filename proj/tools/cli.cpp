#include "tropsym/blocks.hpp"
#include "tropsym/lift.hpp"
#include "tropsym/matching.hpp"
#include "tropsym/matrix.hpp"
#include "tropsym/rank.hpp"
#include "tropsym/series.hpp"
#include "tropsym/witness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace tropsym;

namespace {

constexpr const char* kSchema = "tropsym/1";

std::string fnv_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TropicalMatrix read_matrix(const std::string& path) {
    if (path.rfind("catalog:", 0) == 0) return catalog(path.substr(8)).matrix;
    if (path == "-") return parse_matrix(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open input file: " + path);
    return parse_matrix(in);
}

SeriesMatrix read_series_matrix(const std::string& path) {
    if (path == "-") return parse_series_matrix(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open series file: " + path);
    return parse_series_matrix(in);
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
    auto v = parse_rational(text);
    if (!v) throw CLI::ValidationError(flag + ": not a rational number: " + text);
    return *v;
}

json matrix_json(const TropicalMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.n_rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.n_cols(); ++j) row.push_back(format_rational(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", a.n_rows()},
            {"cols", a.n_cols()},
            {"symmetric", a.symmetric()},
            {"entries", std::move(rows)}};
}

json bijection_json(const OptimalBijection& b) {
    json pairs = json::array();
    for (std::size_t k = 0; k < b.row_idx.size(); ++k)
        pairs.push_back(json::array({b.row_idx[k], b.col_idx[b.assignment[k]]}));
    return pairs;
}

json checks_json(const LiftChecks& c) {
    return {{"degree_match", c.degree_match},
            {"symmetry", c.symmetry},
            {"minor_residual", c.minor_residual},
            {"minor_bound", c.minor_bound},
            {"minors_vanish", c.minors_vanish},
            {"witness_leading", c.witness_leading},
            {"witness_bound", c.witness_bound},
            {"witness_nonsingular", c.witness_nonsingular}};
}

void print_checks_text(const LiftChecks& c) {
    std::cout << "degree match: " << (c.degree_match ? "yes" : "NO") << '\n'
              << "symmetry: " << (c.symmetry ? "yes" : "NO") << '\n'
              << "minors vanish: " << (c.minors_vanish ? "yes" : "NO") << " (max residual "
              << c.minor_residual << ", bound " << c.minor_bound << ")\n"
              << "nonsingular witness: " << (c.witness_nonsingular ? "yes" : "NO")
              << " (leading " << c.witness_leading << ", bound " << c.witness_bound << ")\n";
}

void emit(bool structured, const json& doc, const std::string& text) {
    if (structured)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text;
}

json report_base(const std::string& command, const std::string& input_text) {
    return {{"schema", kSchema},
            {"command", command},
            {"input_digest", fnv_digest(input_text)}};
}

struct Options {
    std::string input;
    std::string series_path;
    bool symmetric = false;
    bool exhaustive = false;
    bool structured = false;
    bool verify = false;
    bool duplicate = false;
    bool border = false;
    std::uint64_t seed = 0;
    std::string trunc;
    std::size_t rank = 2;
    std::size_t wr = 0, wn = 0;
    unsigned threads = 1;
    std::string name;
    std::string big_p, big_m;
    std::vector<std::string> coeffs;
};

TropicalMatrix require_symmetric(TropicalMatrix a) {
    if (a.symmetric()) return a;
    if (!a.is_square() || !a.entries_symmetric())
        throw TropsymError("--symmetric: the input matrix is not symmetric");
    std::vector<Rational> flat;
    flat.reserve(a.n_rows() * a.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i)
        for (std::size_t j = 0; j < a.n_cols(); ++j) flat.push_back(a.at(i, j));
    return TropicalMatrix(a.n_rows(), a.n_cols(), std::move(flat), true);
}

int cmd_det(const Options& opt) {
    TropicalMatrix a = read_matrix(opt.input);
    if (opt.symmetric) a = require_symmetric(a);
    DetResult r = det_report(a);
    json doc = report_base("det", format_matrix(a));
    doc["value"] = format_rational(r.value);
    doc["distinct_monomials"] = r.distinct_monomials;
    doc["tropically_singular"] = r.distinct_monomials > 1;
    json sw = json::array();
    for (const auto& b : r.standard_witnesses) sw.push_back(bijection_json(b));
    doc["standard_witnesses"] = std::move(sw);
    std::ostringstream text;
    text << "tropdet = " << format_rational(r.value) << '\n'
         << "tropically singular: " << (r.distinct_monomials > 1 ? "yes" : "no") << '\n';
    for (const auto& b : r.standard_witnesses)
        text << "  monomial: " << b.as_ambient_permutation(a.n_rows()).cycle_notation()
             << '\n';
    if (a.symmetric()) {
        doc["distinct_classes"] = r.distinct_classes;
        doc["symmetrically_singular"] = r.distinct_classes > 1;
        json yw = json::array();
        for (const auto& b : r.symmetric_witnesses) yw.push_back(bijection_json(b));
        doc["symmetric_witnesses"] = std::move(yw);
        text << "symmetrically singular: " << (r.distinct_classes > 1 ? "yes" : "no")
             << '\n';
    }
    emit(opt.structured, doc, text.str());
    return 0;
}

int cmd_rank(const Options& opt) {
    TropicalMatrix a = read_matrix(opt.input);
    if (opt.symmetric) a = require_symmetric(a);
    RankReport r = opt.symmetric ? symmetric_tropical_rank(a, opt.exhaustive, opt.threads)
                                 : tropical_rank(a, opt.exhaustive, opt.threads);
    json doc = report_base("rank", format_matrix(a));
    doc["rank"] = r.rank;
    doc["symmetric"] = opt.symmetric;
    doc["exhaustive"] = r.exhaustive;
    doc["witness_rows"] = r.row_idx;
    doc["witness_cols"] = r.col_idx;
    std::ostringstream text;
    text << r.rank << '\n';
    emit(opt.structured, doc, text.str());
    return 0;
}

int cmd_normalize(const Options& opt) {
    TropicalMatrix a = require_symmetric(read_matrix(opt.input));
    NormalizeResult r = normalize(a);
    json doc = report_base("normalize", format_matrix(a));
    doc["matrix"] = matrix_json(r.matrix);
    json sc = json::array();
    for (const auto& c : r.scaling.c) sc.push_back(format_rational(c));
    doc["scaling"] = std::move(sc);
    std::ostringstream text;
    text << "scaling:";
    for (const auto& c : r.scaling.c) text << ' ' << format_rational(c);
    text << '\n' << format_matrix(r.matrix);
    emit(opt.structured, doc, text.str());
    return 0;
}

int cmd_decompose(const Options& opt) {
    TropicalMatrix a = require_symmetric(read_matrix(opt.input));
    NormalizeResult norm = normalize(a);
    BlockDecomposition dec = block_decompose(norm.matrix, true);
    json doc = report_base("decompose", format_matrix(a));
    doc["sigma"] = dec.sigma.cycle_notation();
    doc["zero_rows"] = dec.zero_rows;
    doc["b1_size"] = dec.b1_size;
    doc["b2_size"] = dec.b2_size;
    doc["p_size"] = dec.p_size;
    doc["q_size"] = dec.q_size;
    doc["permuted"] = matrix_json(dec.permuted);
    std::ostringstream text;
    text << "sigma: " << dec.sigma.cycle_notation() << '\n'
         << "blocks: zeros=" << dec.zero_rows << " b1=" << dec.b1_size
         << " b2=" << dec.b2_size << " p=" << dec.p_size << " q=" << dec.q_size << '\n'
         << format_matrix(dec.permuted);
    emit(opt.structured, doc, text.str());
    return 0;
}

int cmd_lift(const Options& opt) {
    TropicalMatrix a = require_symmetric(read_matrix(opt.input));
    Rational tau;
    const Rational* tp = nullptr;
    if (!opt.trunc.empty()) {
        tau = parse_rational_arg(opt.trunc, "--trunc");
        tp = &tau;
    }
    LiftCertificate cert;
    if (opt.rank == 1)
        cert = rank1_lift(a, tp);
    else if (opt.rank == 2)
        cert = rank2_symmetric_lift(a, opt.seed, tp);
    else
        throw CLI::ValidationError("--rank: only lifts to rank 1 or 2 are implemented");
    json doc = report_base("lift", format_matrix(a));
    doc["target_rank"] = cert.target_rank;
    doc["seed"] = opt.seed;
    doc["checks"] = checks_json(cert.checks);
    doc["valid"] = cert.valid();
    doc["series"] = format_series_matrix(cert.matrix);
    std::ostringstream text;
    text << format_series_matrix(cert.matrix);
    emit(opt.structured, doc, text.str());
    if (!opt.structured) print_checks_text(cert.checks);
    return cert.valid() ? 0 : 1;
}

int cmd_verify_lift(const Options& opt) {
    TropicalMatrix a = read_matrix(opt.input);
    SeriesMatrix l = read_series_matrix(opt.series_path);
    LiftCertificate cert = verify_lift(a, l, opt.rank);
    json doc = report_base("verify-lift", format_matrix(a));
    doc["target_rank"] = opt.rank;
    doc["checks"] = checks_json(cert.checks);
    doc["valid"] = cert.valid();
    std::ostringstream text;
    text << (cert.valid() ? "valid" : "invalid") << '\n';
    emit(opt.structured, doc, text.str());
    if (!opt.structured) print_checks_text(cert.checks);
    return cert.valid() ? 0 : 1;
}

json record_json(const WitnessRecord& w) {
    return {{"matrix", matrix_json(w.matrix)},
            {"claimed_sym_trop_rank", w.claimed_sym_trop_rank},
            {"claimed_kapranov_gap", w.claimed_kapranov_gap},
            {"provenance", w.provenance}};
}

std::string record_text(const WitnessRecord& w) {
    std::ostringstream text;
    text << format_matrix(w.matrix) << "claimed rank: " << w.claimed_sym_trop_rank << '\n'
         << "kapranov gap: " << (w.claimed_kapranov_gap ? "yes" : "no") << '\n';
    for (const auto& step : w.provenance) text << "provenance: " << step << '\n';
    return text.str();
}

int cmd_witness(const Options& opt) {
    WitnessRecord w = witness(opt.wr, opt.wn);
    json doc = report_base("witness", format_matrix(w.matrix));
    doc["record"] = record_json(w);
    std::ostringstream text;
    text << record_text(w);
    bool ok = true;
    if (opt.verify) {
        ok = verify_claim(w, opt.threads);
        doc["verified"] = ok;
        text << "verified: " << (ok ? "yes" : "NO") << '\n';
    }
    emit(opt.structured, doc, text.str());
    return ok ? 0 : 1;
}

int cmd_extend(const Options& opt) {
    if (opt.duplicate == opt.border)
        throw CLI::ValidationError("extend: pass exactly one of --duplicate, --border");
    TropicalMatrix a = require_symmetric(read_matrix(opt.input));
    WitnessRecord base{a, symmetric_tropical_rank(a, false, opt.threads).rank, false,
                       {"input"}};
    WitnessRecord out = [&] {
        if (opt.duplicate) return duplicate_extend(base);
        Rational pv, mv;
        const Rational *pp = nullptr, *mp = nullptr;
        if (!opt.big_p.empty()) pv = parse_rational_arg(opt.big_p, "--P"), pp = &pv;
        if (!opt.big_m.empty()) mv = parse_rational_arg(opt.big_m, "--M"), mp = &mv;
        return border_extend(base, pp, mp);
    }();
    json doc = report_base("extend", format_matrix(a));
    doc["record"] = record_json(out);
    emit(opt.structured, doc, record_text(out));
    return 0;
}

int cmd_conic(const Options& opt) {
    if (opt.coeffs.size() != 6)
        throw CLI::ValidationError("conic: six coefficients a b c d e f required");
    std::vector<Rational> v;
    for (const auto& s : opt.coeffs) v.push_back(parse_rational_arg(s, "conic"));
    ConicClass cls = classify_conic(v[0], v[1], v[2], v[3], v[4], v[5]);
    bool singular = cls == ConicClass::SingularTwoLines;
    json doc = report_base("conic", opt.coeffs[0] + " " + opt.coeffs[1] + " " +
                                        opt.coeffs[2] + " " + opt.coeffs[3] + " " +
                                        opt.coeffs[4] + " " + opt.coeffs[5]);
    doc["singular"] = singular;
    emit(opt.structured, doc,
         singular ? "singular: union of two tropical lines\n"
                  : "nonsingular: not a union of two tropical lines\n");
    return 0;
}

int cmd_catalog(const Options& opt) {
    if (opt.name.empty()) {
        json doc = report_base("catalog", "");
        doc["names"] = catalog_names();
        std::ostringstream text;
        for (const auto& n : catalog_names()) text << n << '\n';
        emit(opt.structured, doc, text.str());
        return 0;
    }
    WitnessRecord w = catalog(opt.name);
    json doc = report_base("catalog", format_matrix(w.matrix));
    doc["record"] = record_json(w);
    emit(opt.structured, doc, record_text(w));
    return 0;
}

int cmd_selftest(const Options& opt) {
    bool all_ok = true;
    json checks = json::array();
    std::ostringstream text;
    auto check = [&](const std::string& what, bool ok) {
        all_ok = all_ok && ok;
        checks.push_back({{"check", what}, {"ok", ok}});
        text << (ok ? "ok   " : "FAIL ") << what << '\n';
    };
    for (const auto& name : catalog_names()) {
        WitnessRecord w = catalog(name);
        check(name + " claimed rank " + std::to_string(w.claimed_sym_trop_rank),
              verify_claim(w, opt.threads));
    }
    // the cross-notion claims: standard rank of the symmetric rearrangements
    check("fano7_symmetric standard tropical rank 3",
          tropical_rank(catalog("fano7_symmetric").matrix, false, opt.threads).rank == 3);
    check("c2 standard tropical rank 2",
          tropical_rank(catalog("c2").matrix, false, opt.threads).rank == 2);
    check("conic G1 singular",
          classify_conic(1, 0, 1, 0, 0, 0) == ConicClass::SingularTwoLines);
    check("conic G2 nonsingular",
          classify_conic(1, 0, 1, 0, 0, 1) == ConicClass::Nonsingular);
    json doc = report_base("selftest", "");
    doc["checks"] = std::move(checks);
    doc["ok"] = all_ok;
    emit(opt.structured, doc, text.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical and symmetric tropical rank toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--structured", opt.structured,
                      "emit a structured (JSON) report instead of text");
        sub->add_option("--threads", opt.threads, "parallel scan width")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format",
                        [&](const std::vector<std::string>& v) {
                            if (v[0] == "structured") opt.structured = true;
                            else if (v[0] == "text") opt.structured = false;
                            else return false;
                            return true;
                        },
                        "text|structured");
    };

    CLI::App* det = app.add_subcommand("det", "tropical determinant and singularity");
    det->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    det->add_flag("--symmetric", opt.symmetric, "require and use the symmetric notion");
    add_common(det), add_format(det);

    CLI::App* rank = app.add_subcommand("rank", "tropical or symmetric tropical rank");
    rank->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    rank->add_flag("--symmetric", opt.symmetric, "symmetric tropical rank");
    rank->add_flag("--exhaustive", opt.exhaustive, "scan every level");
    add_common(rank), add_format(rank);

    CLI::App* norm = app.add_subcommand("normalize", "symmetric scaling to nonnegative");
    norm->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    add_common(norm), add_format(norm);

    CLI::App* dec = app.add_subcommand("decompose", "canonical block decomposition");
    dec->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    add_common(dec), add_format(dec);

    CLI::App* lift = app.add_subcommand("lift", "rank-1 or rank-2 symmetric lift");
    lift->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    lift->add_option("--rank", opt.rank, "target rank (1 or 2)");
    lift->add_option("--seed", opt.seed, "RNG seed for generic constants");
    lift->add_option("--trunc", opt.trunc, "truncation order (rational)");
    add_common(lift), add_format(lift);

    CLI::App* vl = app.add_subcommand("verify-lift", "check a lift certificate");
    vl->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    vl->add_option("series", opt.series_path, "series-matrix file or -")->required();
    vl->add_option("--rank", opt.rank, "target rank");
    add_common(vl), add_format(vl);

    CLI::App* wit = app.add_subcommand("witness", "non-basis witness matrix");
    wit->add_option("-r", opt.wr, "minor size r")->required();
    wit->add_option("-n", opt.wn, "matrix size n")->required();
    wit->add_flag("--verify", opt.verify, "re-verify the rank claim");
    add_common(wit), add_format(wit);

    CLI::App* ext = app.add_subcommand("extend", "duplicate or border extension");
    ext->add_option("input", opt.input, "matrix file, -, or catalog:<name>")->required();
    ext->add_flag("--duplicate", opt.duplicate, "append a copy of the last row/column");
    ext->add_flag("--border", opt.border, "border with P row/column and M corner");
    ext->add_option("--P", opt.big_p, "border value (default max+1)");
    ext->add_option("--M", opt.big_m, "corner value (default min-1)");
    add_common(ext), add_format(ext);

    CLI::App* conic = app.add_subcommand("conic", "classify a tropical conic");
    conic->add_option("coeffs", opt.coeffs, "a b c d e f")->expected(6);
    add_common(conic), add_format(conic);

    CLI::App* cat = app.add_subcommand("catalog", "list or show catalog matrices");
    cat->add_option("name", opt.name, "catalog entry name");
    add_common(cat), add_format(cat);

    CLI::App* self = app.add_subcommand("selftest", "re-derive every catalog claim");
    add_common(self), add_format(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (det->parsed()) return cmd_det(opt);
        if (rank->parsed()) return cmd_rank(opt);
        if (norm->parsed()) return cmd_normalize(opt);
        if (dec->parsed()) return cmd_decompose(opt);
        if (lift->parsed()) return cmd_lift(opt);
        if (vl->parsed()) return cmd_verify_lift(opt);
        if (wit->parsed()) return cmd_witness(opt);
        if (ext->parsed()) return cmd_extend(opt);
        if (conic->parsed()) return cmd_conic(opt);
        if (cat->parsed()) return cmd_catalog(opt);
        if (self->parsed()) return cmd_selftest(opt);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line << ", token " << e.column << ": "
                  << e.what() << '\n';
        return 2;
    } catch (const StructureViolation& e) {
        std::cerr << "structure violation: " << e.what() << '\n';
        if (!e.witness_rows.empty()) {
            std::cerr << "witness rows (bordered indices):";
            for (auto i : e.witness_rows) std::cerr << ' ' << i;
            std::cerr << "\nwitness cols (bordered indices):";
            for (auto j : e.witness_cols) std::cerr << ' ' << j;
            std::cerr << '\n';
        }
        return 1;
    } catch (const LiftFailed& e) {
        std::cerr << "lift failed: " << e.what() << '\n';
        return 1;
    } catch (const DegenerateDiscriminant& e) {
        std::cerr << "lift failed: " << e.what() << '\n';
        return 1;
    } catch (const TropsymError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
