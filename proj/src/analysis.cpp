#include "sturmlab/analysis.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sturmlab {

void VerificationReport::add(std::string name, std::string params, bool passed,
                             std::string witness, std::size_t instances) {
    checks.push_back(
        {std::move(name), std::move(params), passed, std::move(witness), instances});
}

bool VerificationReport::all_passed() const {
    for (const Check& c : checks)
        if (!c.passed || c.instances == 0) return false;
    return !checks.empty();
}

std::size_t VerificationReport::passed_count() const {
    std::size_t n = 0;
    for (const Check& c : checks)
        if (c.passed && c.instances > 0) ++n;
    return n;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const Check& c : checks) {
        bool ok = c.passed && c.instances > 0;
        os << (ok ? "PASS" : "FAIL") << ' ' << c.name;
        if (!c.params.empty()) os << " [" << c.params << "]";
        os << " instances=" << c.instances;
        if (!c.witness.empty()) os << " :: " << c.witness;
        os << '\n';
    }
    os << passed_count() << "/" << checks.size() << " checks passed\n";
    return os.str();
}

std::string VerificationReport::to_jsonl() const {
    std::ostringstream os;
    for (const Check& c : checks) {
        nlohmann::json j{{"name", c.name},
                         {"params", c.params},
                         {"status", (c.passed && c.instances > 0) ? "pass" : "fail"},
                         {"witness", c.witness},
                         {"instances", c.instances}};
        os << j.dump() << '\n';
    }
    return os.str();
}

ExactReal star_discrepancy(const std::vector<ExactReal>& values) {
    if (values.empty()) throw OutOfUnitInterval("no values");
    for (const ExactReal& v : values) {
        if (v.sign() < 0 || v.cmp(ExactReal(1)) > 0)
            throw OutOfUnitInterval("value outside [0,1]: " + v.format());
    }
    std::vector<ExactReal> x = values;
    std::sort(x.begin(), x.end());
    const long N = (long)x.size();
    ExactReal best(0);
    for (long i = 1; i <= N; ++i) {
        ExactReal up = ExactReal(i, N) - x[(std::size_t)i - 1];
        ExactReal down = x[(std::size_t)i - 1] - ExactReal(i - 1, N);
        if (up.cmp(best) > 0) best = up;
        if (down.cmp(best) > 0) best = down;
    }
    return best;
}

VerificationReport equidistribution_report(const Representative& rep,
                                           const std::vector<std::size_t>& schedule) {
    VerificationReport rpt;
    ExactReal prev;
    bool have_prev = false, trend_ok = true;
    std::string trend_witness;
    for (std::size_t N : schedule) {
        if (N < 1 || N > rep.size()) throw LengthOutOfRange("schedule entry out of range");
        std::vector<ExactReal> window(rep.values().begin(), rep.values().begin() + (long)N);
        ExactReal d = star_discrepancy(window);
        rpt.add("star_discrepancy", "N=" + std::to_string(N), true,
                "D*=" + d.format() + " ~ " + std::to_string(d.to_double()), N);
        if (have_prev && d.cmp(prev) > 0 && trend_ok) {
            trend_ok = false;
            trend_witness = "D* increased at N=" + std::to_string(N);
        }
        prev = d;
        have_prev = true;
    }
    rpt.add("discrepancy_trend", "schedule of " + std::to_string(schedule.size()), trend_ok,
            trend_ok ? "non-increasing (empirical -- cannot certify the limit)" : trend_witness,
            schedule.size());
    return rpt;
}

namespace {

// canonical conjugacy-class key: lexicographically least rotation
std::string canonical_rotation(const Word& w) {
    std::string best = w.str();
    std::string dbl = w.str() + w.str();
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::string cand = dbl.substr(i, w.size());
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace

VerificationReport verify_sturmian_word(const ExactReal& sigma, std::size_t depth) {
    if (sigma.is_rational()) throw RationalSlope();
    VerificationReport rpt;

    std::size_t count_bad = 0, weight_bad = 0, conj_bad = 0;
    std::string count_w, weight_w, conj_w;
    std::size_t weight_instances = 0, conj_instances = 0;
    for (std::size_t n = 1; n <= depth; ++n) {
        FactorSet fs = enumerate_factors_exact(sigma, n);
        if (fs.members.size() != n + 1 && count_bad++ == 0)
            count_w = "n=" + std::to_string(n) + " gave " + std::to_string(fs.members.size());
        std::map<std::string, std::set<WeightClass>> classes;
        for (const Word& f : fs.members) {
            ++weight_instances;
            try {
                classes[canonical_rotation(f)].insert(weight_class(f, sigma));
            } catch (const NotAFactorWeight&) {
                if (weight_bad++ == 0) weight_w = "factor " + f.str();
            }
        }
        for (const auto& [key, ws] : classes) {
            ++conj_instances;
            if (ws.size() > 1 && conj_bad++ == 0) conj_w = "class of " + key;
        }
    }
    rpt.add("factor_count_n_plus_1", "n=1.." + std::to_string(depth), count_bad == 0, count_w,
            depth);
    rpt.add("ones_in_floor_ceil", "n=1.." + std::to_string(depth), weight_bad == 0, weight_w,
            weight_instances);
    rpt.add("conjugacy_weight_constant", "n=1.." + std::to_string(depth), conj_bad == 0, conj_w,
            conj_instances);

    // prefix-window complexity agrees with the exact counts
    std::size_t L = std::max<std::size_t>(2000, 100 * depth);
    Word prefix = generate(SturmianSpec(sigma, ExactReal(0)), L);
    ComplexityProfile prof = complexity_profile(prefix, depth);
    std::size_t prof_bad = 0;
    std::string prof_w;
    for (std::size_t n = 1; n <= depth; ++n) {
        if (prof[n] != n + 1 && prof_bad++ == 0)
            prof_w = "n=" + std::to_string(n) + " gave " + std::to_string(prof[n]);
    }
    rpt.add("prefix_complexity_matches", "L=" + std::to_string(L), prof_bad == 0, prof_w, depth);

    mpq_class dens = frequency_report(generate(SturmianSpec(sigma, ExactReal(0)), 10000));
    ExactReal gap = (ExactReal::rational(dens) - sigma).abs();
    bool dens_ok = gap.cmp(ExactReal(1, 100)) < 0;
    rpt.add("ones_density_near_slope", "L=10000", dens_ok,
            "density=" + dens.get_str() + " |gap|~" + std::to_string(gap.to_double()), 1);
    return rpt;
}

VerificationReport verify_sturmian_permutation(const ExactReal& sigma, const ExactReal& rho,
                                               std::size_t depth, std::size_t L,
                                               std::uint64_t seed) {
    VerificationReport rpt;
    Representative rep = sturmian_representative(sigma, rho, L);

    ComplexityProfile prof = perm_complexity_profile(rep, depth);
    std::size_t bad = 0;
    std::string w;
    for (std::size_t n = 1; n <= depth; ++n) {
        if (prof[n] != n && bad++ == 0)
            w = "n=" + std::to_string(n) + " gave " + std::to_string(prof[n]);
    }
    rpt.add("perm_complexity_equals_n", "n=1.." + std::to_string(depth), bad == 0, w, depth);

    Word und = underlying_word(rep);
    Word gen = generate(SturmianSpec(sigma, rho), L - 1);
    rpt.add("underlying_word_matches_coding", "L=" + std::to_string(L), und == gen,
            und == gen ? "" : "words differ", L - 1);

    // order <-> light/heavy on random index pairs
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, L - 1);
    std::size_t pair_bad = 0, pairs = 0;
    std::string pair_w;
    const auto& ranks = rep.global_ranks();
    while (pairs < 1000) {
        std::size_t i = dist(rng), j = dist(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        ++pairs;
        Word factor = gen.substr(i, j - i);
        bool light = weight_class(factor, sigma) == WeightClass::light;
        bool up = ranks[i] < ranks[j];
        if (up != light && pair_bad++ == 0)
            pair_w = "i=" + std::to_string(i) + " j=" + std::to_string(j);
    }
    rpt.add("order_matches_weight", "pairs=1000 seed=" + std::to_string(seed), pair_bad == 0,
            pair_w, pairs);

    std::size_t ext_bad = 0, n_ext = std::max<std::size_t>(1, depth / 2);
    std::string ext_w;
    for (std::size_t N = 1; N <= n_ext; ++N) {
        ExtremalElements e = find_N_extremal(rep, N);
        if ((e.maximal.empty() || e.minimal.empty()) && ext_bad++ == 0)
            ext_w = "N=" + std::to_string(N);
    }
    rpt.add("extremal_elements_exist", "N=1.." + std::to_string(n_ext), ext_bad == 0, ext_w,
            n_ext);

    ComplexityProfile word_prof = complexity_profile(und, depth > 1 ? depth - 1 : 1);
    std::size_t bridge_bad = 0;
    std::string bridge_w;
    for (std::size_t n = 2; n <= depth; ++n) {
        if (prof[n] < word_prof[n - 1] && bridge_bad++ == 0) bridge_w = "n=" + std::to_string(n);
    }
    rpt.add("complexity_bridge", "n=2.." + std::to_string(depth), bridge_bad == 0, bridge_w,
            depth > 1 ? depth - 1 : 0);
    return rpt;
}

VerificationReport verify_decomposition(const ExactReal& sigma, std::size_t levels,
                                        std::size_t L) {
    if (sigma.is_rational()) throw RationalSlope();
    if (levels < 1) throw LengthOutOfRange("levels must be >= 1");
    VerificationReport rpt;
    auto cf = ExactReal::cf_expansion(sigma, levels + 2);
    std::vector<mpz_class> ds;
    ds.push_back(cf.quotients[0] - 1);
    for (std::size_t i = 1; i < cf.quotients.size(); ++i) ds.push_back(cf.quotients[i]);
    std::size_t buildable = std::min(levels, ds.size() > 0 ? ds.size() - 1 : 0);
    StandardWordTower tower(ds, buildable);

    Word prefix = generate(SturmianSpec(sigma, ExactReal(0)), L);
    for (std::size_t lvl = 0; lvl <= levels; ++lvl) {
        std::string params = "level=" + std::to_string(lvl);
        if (lvl > buildable || lvl + 1 > tower.num_quotients()) {
            rpt.add("decomposition_horizon", params, true, "horizon exceeded, level skipped", 1);
            continue;
        }
        if (!tower.d(lvl + 1).fits_ulong_p()) {
            rpt.add("decomposition_horizon", params, true, "quotient beyond word budget", 1);
            continue;
        }
        std::size_t dv = tower.d(lvl + 1).get_ui();
        std::size_t block = dv * tower.s((long)lvl).size() + tower.s((long)lvl - 1).size();
        if (2 * (block + tower.s((long)lvl).size()) > L) {
            rpt.add("decomposition_horizon", params, true, "prefix too short for two blocks", 1);
            continue;
        }
        try {
            Factorization f = factorize(prefix, tower, lvl);
            bool exp_ok = true;
            for (std::size_t k : f.exponents)
                if (k != dv && k != dv + 1) exp_ok = false;
            rpt.add("exponents_in_range", params, exp_ok,
                    "blocks=" + std::to_string(f.exponents.size()), f.exponents.size());

            std::string rebuilt = f.prefix.str();
            for (std::size_t k : f.exponents) {
                for (std::size_t i = 0; i < k; ++i) rebuilt += tower.s((long)lvl).str();
                rebuilt += tower.s((long)lvl - 1).str();
            }
            rebuilt += f.residue.str();
            rpt.add("reconstruction_exact", params, rebuilt == prefix.str(), "", 1);

            std::size_t bound = (dv + 1) * tower.s((long)lvl).size() + tower.s((long)lvl - 1).size();
            rpt.add("prefix_bounded", params, f.prefix.size() <= bound,
                    "|p|=" + std::to_string(f.prefix.size()), 1);
        } catch (const ParseFailure& e) {
            rpt.add("factorize", params, false, e.what(), 1);
        }

        // weight alternation across the level
        try {
            WeightClass base = weight_class(tower.s((long)lvl), sigma);
            bool alt_ok = true;
            std::string blockstr;
            std::size_t k_checked = 0;
            for (std::size_t k = 1; k <= dv; ++k) {
                blockstr += tower.s((long)lvl).str();
                Word blk(blockstr + tower.s((long)lvl - 1).str());
                ++k_checked;
                if (weight_class(blk, sigma) == base) alt_ok = false;
            }
            if (k_checked > 0)
                rpt.add("weight_alternation", params, alt_ok, "", k_checked);
        } catch (const NotAFactorWeight& e) {
            rpt.add("weight_alternation", params, false, e.what(), 1);
        }
    }

    // Christoffel lengths agree with tower block lengths
    std::size_t horizon = std::min<std::size_t>(500, L);
    auto lens = christoffel_lengths(sigma, horizon);
    StandardWordTower deep = tower_from_slope(sigma, horizon + 1);
    auto blocks = tower_block_lengths(deep, horizon);
    std::set<std::size_t> lens_set(lens.begin(), lens.end());
    rpt.add("christoffel_lengths_match_blocks", "n<=" + std::to_string(horizon),
            lens_set == blocks, "", lens_set.size());
    return rpt;
}

VerificationReport monotone_diagnostics(const Representative& rep, std::size_t N_max) {
    if (rep.size() < 4 * N_max) throw LengthOutOfRange("representative too short");
    VerificationReport rpt;
    for (std::size_t N = 1; N <= N_max; ++N) {
        std::size_t inc = longest_monotone_chain(rep, N, Direction::increasing);
        std::size_t dec = longest_monotone_chain(rep, N, Direction::decreasing);
        rpt.add("longest_monotone_chain", "N=" + std::to_string(N), true,
                "inc=" + std::to_string(inc) + " dec=" + std::to_string(dec), rep.size());
        ExtremalElements e = find_N_extremal(rep, N);
        rpt.add("extremal_elements", "N=" + std::to_string(N),
                !e.maximal.empty() && !e.minimal.empty(),
                "maximal=" + std::to_string(e.maximal.size()) +
                    " minimal=" + std::to_string(e.minimal.size()),
                rep.size() >= 2 * N + 1 ? rep.size() - 2 * N : 0);
    }
    return rpt;
}

}  // namespace sturmlab
