// sturmlab command line front end. Thin adapters over the library; every
// subcommand prints exactly what the corresponding module call returns.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sturmlab/analysis.hpp"
#include "sturmlab/chart.hpp"
#include "sturmlab/constructions.hpp"
#include "sturmlab/errors.hpp"

using namespace sturmlab;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240915;

std::uint64_t report_seed() {
    if (const char* env = std::getenv("STURMLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw SyntaxError("STURMLAB_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

Convention parse_convention(const std::string& s) {
    if (s == "lower") return Convention::lower;
    if (s == "upper") return Convention::upper;
    throw SyntaxError("convention must be 'lower' or 'upper'");
}

// builder flags shared by the perm/analyze subcommands
struct RepOpts {
    std::string kind = "sturmian";
    std::string slope;
    std::string intercept = "0";
    std::size_t length = 1000;
    std::string variant = "a";
    std::string nk = "2^k";
};

void add_rep_opts(CLI::App* cmd, RepOpts& o, bool positional_kind) {
    if (positional_kind)
        cmd->add_option("kind", o.kind, "sturmian | thue-morse | example1 | slow")->required();
    else
        cmd->add_option("--kind", o.kind, "sturmian | thue-morse | example1 | slow");
    cmd->add_option("--slope", o.slope, "slope in the exactreal grammar (sturmian)");
    cmd->add_option("--intercept", o.intercept, "intercept in the exactreal grammar (sturmian)");
    cmd->add_option("--length", o.length, "representative length");
    cmd->add_option("--variant", o.variant, "a | b (example1)");
    cmd->add_option("--nk", o.nk, "'2^k' or a comma-separated increasing list (slow)");
}

std::vector<mpz_class> parse_nk(const std::string& s, std::size_t length) {
    std::vector<mpz_class> nk;
    std::size_t needed = (length + 1) / 2;  // odd positions 2k-1 < length
    if (s == "2^k") {
        for (std::size_t k = 1; k <= needed; ++k) nk.push_back(mpz_class(1) << k);
        return nk;
    }
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            nk.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw SyntaxError("bad nk entry: '" + tok + "'");
        }
    }
    if (nk.empty()) throw SyntaxError("empty nk list");
    return nk;
}

Representative build_rep(const RepOpts& o) {
    if (o.kind == "sturmian") {
        if (o.slope.empty()) throw SyntaxError("--slope is required for kind sturmian");
        return sturmian_representative(ExactReal::parse(o.slope), ExactReal::parse(o.intercept),
                                       o.length);
    }
    if (o.kind == "thue-morse") return thue_morse_representative(o.length);
    if (o.kind == "example1") {
        if (o.variant != "a" && o.variant != "b") throw SyntaxError("variant must be a or b");
        return example1_representative(o.length,
                                       o.variant == "a" ? Example1Variant::a : Example1Variant::b);
    }
    if (o.kind == "slow") return slow_complexity_representative(parse_nk(o.nk, o.length), o.length);
    throw SyntaxError("unknown kind: '" + o.kind + "'");
}

// every command renders into this buffer; flushed to --out or stdout at exit
struct Output {
    std::ostringstream buf;
    std::string path;

    int flush() {
        if (path.empty()) {
            std::cout << buf.str();
            return 0;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << path << '\n';
            return 2;
        }
        f << buf.str();
        return 0;
    }
};

void emit_profile(Output& out, const ComplexityProfile& p, bool as_json) {
    for (const auto& [n, c] : p) {
        if (as_json)
            out.buf << json{{"n", n}, {"count", c}}.dump() << '\n';
        else
            out.buf << n << ' ' << c << '\n';
    }
}

// returns the process exit code for a verification report
int emit_report(Output& out, const VerificationReport& r, bool as_json) {
    out.buf << (as_json ? r.to_jsonl() : r.to_text());
    return r.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sturmian words, permutations, and equidistribution diagnostics"};
    app.require_subcommand(1);

    Output out;
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable line-delimited records");
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    int exit_code = 0;

    // ---------------------------------------------------------------- word
    auto* word = app.add_subcommand("word", "finite and Sturmian word operations");
    word->require_subcommand(1);

    struct {
        std::string slope, intercept = "0", convention = "lower", bispecial;
        std::size_t length = 100, n = 5, n_max = 20, level = 0, min_length = 100;
        bool have_bispecial = false;
    } w;

    auto* wgen = word->add_subcommand("gen", "generate a rotation-coded prefix");
    wgen->add_option("--slope", w.slope)->required();
    wgen->add_option("--intercept", w.intercept);
    wgen->add_option("--length", w.length);
    wgen->add_option("--convention", w.convention);
    wgen->callback([&] {
        SturmianSpec spec(ExactReal::parse(w.slope), ExactReal::parse(w.intercept),
                          parse_convention(w.convention));
        out.buf << generate(spec, w.length).str() << '\n';
    });

    auto* wfac = word->add_subcommand("factors", "exact length-n factor set of a slope");
    wfac->add_option("--slope", w.slope)->required();
    wfac->add_option("--n", w.n);
    wfac->callback([&] {
        FactorSet fs = enumerate_factors_exact(ExactReal::parse(w.slope), w.n);
        for (const Word& f : fs.members) {
            if (as_json)
                out.buf << json{{"factor", f.str()}, {"length", fs.length}}.dump() << '\n';
            else
                out.buf << f.str() << '\n';
        }
    });

    auto* wcx = word->add_subcommand("complexity",
                                     "factor counts: exact by default, prefix-based with --length");
    wcx->add_option("--slope", w.slope)->required();
    wcx->add_option("--n-max", w.n_max);
    auto* wcx_len = wcx->add_option("--length", w.length, "scan a generated prefix instead");
    wcx->add_option("--intercept", w.intercept);
    wcx->callback([&] {
        ExactReal sigma = ExactReal::parse(w.slope);
        ComplexityProfile p;
        if (*wcx_len) {
            Word prefix = generate(SturmianSpec(sigma, ExactReal::parse(w.intercept)), w.length);
            p = complexity_profile(prefix, w.n_max);
        } else {
            for (std::size_t n = 1; n <= w.n_max; ++n)
                p[n] = enumerate_factors_exact(sigma, n).members.size();
        }
        emit_profile(out, p, as_json);
    });

    auto* wstd = word->add_subcommand("standard", "standard word tower of a slope");
    wstd->add_option("--slope", w.slope)->required();
    wstd->add_option("--min-length", w.min_length);
    wstd->callback([&] {
        StandardWordTower t = tower_from_slope(ExactReal::parse(w.slope), w.min_length);
        for (std::size_t n = 1; n <= t.levels(); ++n) {
            if (as_json)
                out.buf << json{{"n", n},
                                {"d", t.d(n).get_str()},
                                {"s", t.s((long)n).str()}}
                               .dump()
                        << '\n';
            else
                out.buf << n << " d=" << t.d(n).get_str() << " s=" << t.s((long)n).str() << '\n';
        }
    });

    auto* wchr = word->add_subcommand(
        "christoffel", "Christoffel lengths of a slope, or the pair over a bispecial factor");
    auto* wchr_slope = wchr->add_option("--slope", w.slope);
    wchr->add_option("--n-max", w.n_max);
    wchr->add_option("--bispecial", w.bispecial, "emit the pair (0b1, 1b0) for this factor");
    wchr->callback([&] {
        if (wchr->count("--bispecial")) {
            auto [c0, c1] = christoffel_pair(Word(w.bispecial));
            if (as_json)
                out.buf << json{{"lower", c0.str()}, {"upper", c1.str()}}.dump() << '\n';
            else
                out.buf << c0.str() << '\n' << c1.str() << '\n';
            return;
        }
        if (!*wchr_slope) throw SyntaxError("need --slope or --bispecial");
        for (std::size_t n : christoffel_lengths(ExactReal::parse(w.slope), w.n_max))
            out.buf << n << '\n';
    });

    auto* wfz = word->add_subcommand("factorize", "level-n block decomposition of a prefix");
    wfz->add_option("--slope", w.slope)->required();
    wfz->add_option("--intercept", w.intercept);
    wfz->add_option("--length", w.length);
    wfz->add_option("--level", w.level);
    wfz->callback([&] {
        ExactReal sigma = ExactReal::parse(w.slope);
        Word prefix = generate(SturmianSpec(sigma, ExactReal::parse(w.intercept)), w.length);
        StandardWordTower t = tower_from_slope(sigma, w.length + 1);
        Factorization f = factorize(prefix, t, w.level);
        if (as_json) {
            out.buf << json{{"prefix", f.prefix.str()},
                            {"exponents", f.exponents},
                            {"residue", f.residue.str()}}
                           .dump()
                    << '\n';
        } else {
            out.buf << "prefix " << f.prefix.str() << '\n';
            out.buf << "exponents";
            for (std::size_t k : f.exponents) out.buf << ' ' << k;
            out.buf << '\n' << "residue " << f.residue.str() << '\n';
        }
    });

    // ---------------------------------------------------------------- perm
    auto* perm = app.add_subcommand("perm", "permutation representatives and diagnostics");
    perm->require_subcommand(1);
    RepOpts ro;

    struct {
        std::size_t n_max = 10, N = 1, index = 0, t_max = 8;
        std::string format = "ascii";
        bool by_values = false;
    } p;

    auto* pgen = perm->add_subcommand("gen", "emit a representative, one value per line");
    add_rep_opts(pgen, ro, true);
    pgen->callback([&] {
        Representative rep = build_rep(ro);
        for (std::size_t i = 0; i < rep.size(); ++i) {
            if (as_json)
                out.buf << json{{"index", i}, {"value", rep[i].format()}}.dump() << '\n';
            else
                out.buf << rep[i].format() << '\n';
        }
    });

    auto* pcx = perm->add_subcommand("complexity", "window pattern counts");
    add_rep_opts(pcx, ro, false);
    pcx->add_option("--n-max", p.n_max);
    pcx->callback([&] { emit_profile(out, perm_complexity_profile(build_rep(ro), p.n_max), as_json); });

    auto* pund = perm->add_subcommand("underlying", "ascent/descent word of a representative");
    add_rep_opts(pund, ro, false);
    pund->callback([&] { out.buf << underlying_word(build_rep(ro)).str() << '\n'; });

    auto* pch = perm->add_subcommand("chart", "ascii or svg chart of a representative");
    add_rep_opts(pch, ro, false);
    pch->add_option("--format", p.format, "ascii | svg");
    pch->add_flag("--values", p.by_values, "svg: place points by value instead of rank");
    pch->callback([&] {
        Representative rep = build_rep(ro);
        if (p.format == "ascii")
            out.buf << ascii_chart(pattern_of(rep, 0, rep.size()));
        else if (p.format == "svg")
            out.buf << svg_chart(rep, {}, p.by_values);
        else
            throw SyntaxError("format must be ascii or svg");
    });

    auto* pmono = perm->add_subcommand("monotone", "N-monotone chain / extremal report");
    add_rep_opts(pmono, ro, false);
    pmono->add_option("--n-max", p.n_max);
    pmono->callback(
        [&] { exit_code = emit_report(out, monotone_diagnostics(build_rep(ro), p.n_max), as_json); });

    auto* pext = perm->add_subcommand("extremal", "N-extremal element indices");
    add_rep_opts(pext, ro, false);
    pext->add_option("--N", p.N);
    pext->callback([&] {
        ExtremalElements e = find_N_extremal(build_rep(ro), p.N);
        if (as_json) {
            out.buf << json{{"maximal", e.maximal}, {"minimal", e.minimal}}.dump() << '\n';
            return;
        }
        out.buf << "maximal";
        for (std::size_t i : e.maximal) out.buf << ' ' << i;
        out.buf << '\n' << "minimal";
        for (std::size_t i : e.minimal) out.buf << ' ' << i;
        out.buf << '\n';
    });

    auto* pest = perm->add_subcommand("estimate", "canonical-representative estimate at an index");
    add_rep_opts(pest, ro, false);
    pest->add_option("--index", p.index);
    pest->callback([&] {
        mpq_class q = canonical_estimate(build_rep(ro), p.index);
        if (as_json)
            out.buf << json{{"index", p.index}, {"estimate", q.get_str()}}.dump() << '\n';
        else
            out.buf << q.get_str() << '\n';
    });

    auto* pper = perm->add_subcommand("period", "smallest order-structure period");
    add_rep_opts(pper, ro, false);
    pper->add_option("--t-max", p.t_max);
    pper->callback([&] {
        auto r = detect_perm_period(build_rep(ro), p.t_max);
        if (as_json) {
            json j;
            if (r)
                j = {{"preperiod", r->preperiod}, {"period", r->period}};
            else
                j = {{"period", nullptr}};
            out.buf << j.dump() << '\n';
        } else if (r) {
            out.buf << "preperiod " << r->preperiod << " period " << r->period << '\n';
        } else {
            out.buf << "absent\n";
        }
    });

    // ------------------------------------------------------------- analyze
    auto* analyze = app.add_subcommand("analyze", "equidistribution diagnostics");
    analyze->require_subcommand(1);
    std::string schedule_str = "1000";

    auto* adisc = analyze->add_subcommand("discrepancy", "exact star discrepancy D*");
    add_rep_opts(adisc, ro, false);
    adisc->callback([&] {
        Representative rep = build_rep(ro);
        ExactReal d = star_discrepancy(rep.values());
        if (as_json)
            out.buf << json{{"N", rep.size()},
                            {"dstar", d.format()},
                            {"approx", d.to_double()}}
                           .dump()
                    << '\n';
        else
            out.buf << d.format() << " ~ " << d.to_double() << '\n';
    });

    auto* arep = analyze->add_subcommand("report", "D* along a window schedule");
    add_rep_opts(arep, ro, false);
    arep->add_option("--schedule", schedule_str, "comma-separated window sizes");
    arep->callback([&] {
        std::vector<std::size_t> schedule;
        std::istringstream is(schedule_str);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                schedule.push_back(std::stoull(tok));
            } catch (const std::exception&) {
                throw SyntaxError("bad schedule entry: '" + tok + "'");
            }
        }
        exit_code = emit_report(out, equidistribution_report(build_rep(ro), schedule), as_json);
    });

    // -------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "verification reports; exit 1 on any failed check");
    verify->require_subcommand(1);
    struct {
        std::string slope, intercept = "1/3";
        std::size_t depth = 50, length = 10000, levels = 4;
    } v;

    auto* vw = verify->add_subcommand("sturmian-word", "factor-structure checks of a slope");
    vw->add_option("--slope", v.slope)->required();
    vw->add_option("--depth", v.depth);
    vw->callback(
        [&] { exit_code = emit_report(out, verify_sturmian_word(ExactReal::parse(v.slope), v.depth), as_json); });

    auto* vp = verify->add_subcommand("sturmian-perm", "permutation-side checks of a slope");
    vp->add_option("--slope", v.slope)->required();
    vp->add_option("--intercept", v.intercept);
    vp->add_option("--depth", v.depth);
    vp->add_option("--length", v.length);
    vp->callback([&] {
        exit_code = emit_report(
            out,
            verify_sturmian_permutation(ExactReal::parse(v.slope), ExactReal::parse(v.intercept),
                                        v.depth, v.length, report_seed()),
            as_json);
    });

    auto* vd = verify->add_subcommand("decomposition", "block-decomposition checks of a slope");
    vd->add_option("--slope", v.slope)->required();
    vd->add_option("--levels", v.levels);
    vd->add_option("--length", v.length);
    vd->callback([&] {
        exit_code =
            emit_report(out, verify_decomposition(ExactReal::parse(v.slope), v.levels, v.length),
                        as_json);
    });

    auto* va = verify->add_subcommand("all", "run every verification suite");
    va->add_option("--slope", v.slope)->required();
    va->add_option("--intercept", v.intercept);
    va->add_option("--depth", v.depth);
    va->add_option("--length", v.length);
    va->add_option("--levels", v.levels);
    va->callback([&] {
        ExactReal sigma = ExactReal::parse(v.slope);
        VerificationReport all;
        for (VerificationReport r :
             {verify_sturmian_word(sigma, v.depth),
              verify_sturmian_permutation(sigma, ExactReal::parse(v.intercept), v.depth, v.length,
                                          report_seed()),
              verify_decomposition(sigma, v.levels, v.length)})
            for (Check& c : r.checks) all.checks.push_back(std::move(c));
        exit_code = emit_report(out, all, as_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const sturmlab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    int flush_code = out.flush();
    return flush_code != 0 ? flush_code : exit_code;
}
