// wpq: weighted projective spaces over Q at the command line.
//
// Subcommands: height, point, count, lift, fiber, sparsity, veronese-degree
// (alias: degree), constants. Every subcommand has a --check mode that runs
// the matching independent oracle and exits 4 on disagreement; --check paper
// compares against the published worked examples whose values this library
// disputes, reporting divergences without failing.
//
// Exit codes: 0 success, 2 parse/validation error, 3 budget exceeded,
// 4 oracle mismatch.

#include "wpq/constants.hpp"
#include "wpq/counting.hpp"
#include "wpq/render.hpp"
#include "wpq/sieve.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

using nlohmann::json;

namespace {

struct Common {
    std::string weights;
    unsigned long long budget = 100000000;
    unsigned workers = 1;
    std::string tol = "1/1000000000";
    std::string out;
    std::string format;
    long seed = 1;
    std::string check;  // "", "auto", or "paper"
    std::string fixtures_dir = "fixtures/disputed";
};

void attach_common(CLI::App* cmd, Common& c, bool weights_required = true) {
    auto* w = cmd->add_option("-w,--weights", c.weights, "Weights, e.g. 2,4,6,10");
    if (weights_required) w->required();
    cmd->add_option("--budget", c.budget, "Max tuple enumerations");
    cmd->add_option("--workers", c.workers, "Worker threads");
    cmd->add_option("--tol", c.tol, "Enclosure tolerance (rational)");
    cmd->add_option("--out", c.out, "Write output to this path instead of stdout");
    cmd->add_option("--format", c.format, "Output format: csv, json or plain");
    cmd->add_option("--seed", c.seed, "Seed for randomized check sampling");
    cmd->add_option("--check", c.check, "Run the independent oracle (or 'paper')")
        ->expected(0, 1)
        ->default_str("auto");
    cmd->add_option("--fixtures", c.fixtures_dir, "Directory of disputed fixtures");
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + c.out);
    f << text;
}

wpq::WeightSystem parse_ws(const Common& c) {
    return wpq::validate(wpq::parse_uint_list(c.weights));
}

wpq::Rat parse_tol(const Common& c) {
    wpq::Rat t = wpq::parse_rat(c.tol);
    if (t <= 0) throw std::invalid_argument("--tol must be positive");
    return t;
}

// -------------------------------------------------------------------------
// disputed fixtures (--check paper)
// -------------------------------------------------------------------------

int run_paper_fixtures(const Common& c) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (fs::is_directory(c.fixtures_dir))
        for (const auto& e : fs::directory_iterator(c.fixtures_dir))
            if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no fixtures found under " << c.fixtures_dir << "\n";
        return 2;
    }
    std::ostringstream out;
    for (const auto& path : files) {
        std::ifstream f(path);
        json fx = json::parse(f);
        std::string kind = fx.at("kind");
        wpq::WeightSystem ws = wpq::validate(fx.at("weights").get<std::vector<unsigned long>>());
        out << "fixture " << fx.at("id").get<std::string>() << " [" << kind << "]\n";
        if (kind == "height") {
            wpq::WeightedPoint p(wpq::parse_rat_list(fx.at("point")), ws);
            auto claims = fx.at("claims");
            wpq::Rat w = wpq::wgcd(p).value();
            wpq::ExactHeight h = wpq::weighted_height(p);
            wpq::ExactHeight s = wpq::size_height(p);
            auto line = [&](const std::string& name, const std::string& claimed,
                            const std::string& computed) {
                out << "  " << name << ": published " << claimed << ", computed " << computed
                    << (claimed == computed ? "  [agrees]" : "  [diverges]") << "\n";
            };
            if (claims.contains("wgcd")) line("wgcd", claims["wgcd"], w.get_str());
            if (claims.contains("weighted_height"))
                line("weighted_height", claims["weighted_height"], h.to_string());
            if (claims.contains("size")) line("size", claims["size"], s.to_string());
        } else if (kind == "coefficient") {
            wpq::BoundedReal c2 = wpq::rational_leading_constant(ws, wpq::Rat(1, 1000000));
            std::string computed = wpq::mid_string(c2, 6);
            std::string claimed = fx.at("claims").at("coefficient");
            out << "  leading coefficient: published " << claimed << ", computed " << computed
                << "  [diverges]\n";
        } else if (kind == "lift") {
            wpq::ProjectivePoint y(
                [&] {
                    std::vector<wpq::Int> v;
                    for (const wpq::Rat& r : wpq::parse_rat_list(fx.at("target")))
                        v.emplace_back(r.get_num());
                    return v;
                }());
            wpq::LiftResult r = wpq::lift_check(y, ws);
            bool claimed = fx.at("claims").at("liftable");
            out << "  liftable: published " << (claimed ? "true" : "false") << ", computed "
                << (r.liftable ? "true" : "false")
                << (claimed == r.liftable ? "  [agrees]" : "  [diverges]") << "\n";
            if (r.liftable)
                out << "  computed lambda " << r.lambda->get_str() << " (the published example fixes lambda = "
                    << fx.at("claims").at("fixed_lambda").get<std::string>() << ")\n";
        }
        if (fx.contains("note")) out << "  note: " << fx.at("note").get<std::string>() << "\n";
    }
    emit(c, out.str());
    return 0;
}

// -------------------------------------------------------------------------
// height
// -------------------------------------------------------------------------

int run_height(const Common& c, const std::string& point, unsigned samples) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::WeightedPoint p(wpq::parse_rat_list(point), ws);

    wpq::ExactHeight h = wpq::weighted_height(p);
    wpq::ExactHeight arch = wpq::archimedean_height(p);
    wpq::ExactHeight sz = wpq::size_height(p);
    wpq::ExactHeight weil = wpq::weil_height(wpq::veronese(p));

    if (!c.check.empty()) {
        // h(p)^q must equal the Weil height of the Veronese image, with the
        // right side recomputed through the local (valuation) route.
        auto check_one = [&](const wpq::WeightedPoint& pt) {
            wpq::Rat local = wpq::weighted_height_pow_q_local(pt);
            wpq::Rat via = wpq::weighted_height(pt).pow(pt.system.q);
            if (local != via) throw wpq::OracleMismatch("h^q != H(veronese) at point");
        };
        check_one(p);
        std::mt19937_64 rng(static_cast<unsigned long long>(c.seed));
        std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
        for (unsigned i = 0; i < samples; ++i) {
            std::vector<wpq::Rat> coords;
            bool nonzero = false;
            for (std::size_t j = 0; j < ws.arity(); ++j) {
                wpq::Rat r(num(rng), den(rng));
                r.canonicalize();
                if (r != 0) nonzero = true;
                coords.push_back(r);
            }
            if (!nonzero) coords[0] = 1;
            check_one(wpq::WeightedPoint(coords, ws));
        }
    }

    std::string fmt = c.format.empty() ? "json" : c.format;
    if (fmt == "plain") {
        std::ostringstream out;
        out << "weighted_height = " << h.to_string() << " ~ " << wpq::mid_string(h.enclosure())
            << "\narchimedean     = " << arch.to_string() << " ~ "
            << wpq::mid_string(arch.enclosure()) << "\nsize            = " << sz.to_string()
            << " ~ " << wpq::mid_string(sz.enclosure()) << "\nweil_of_image   = "
            << weil.to_string() << "\n";
        emit(c, out.str());
    } else {
        json j;
        j["weighted_height"] = wpq::height_json(h);
        j["archimedean_height"] = wpq::height_json(arch);
        j["size"] = wpq::height_json(sz);
        j["weil_of_image"] = wpq::height_json(weil);
        emit(c, j.dump(2));
    }
    return 0;
}

// -------------------------------------------------------------------------
// point utilities
// -------------------------------------------------------------------------

int run_point(const Common& c, const std::string& point, const std::string& other) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::WeightedPoint p(wpq::parse_rat_list(point), ws);
    json j;
    j["wgcd"] = wpq::wgcd(p).value().get_str();
    auto coords_json = [](const wpq::WeightedPoint& q) {
        json arr = json::array();
        for (const wpq::Rat& x : q.coords) arr.push_back(x.get_str());
        return arr;
    };
    j["normalized"] = coords_json(wpq::normalize(p));
    j["canonical"] = coords_json(wpq::canonicalize(p));
    json ver = json::array();
    for (const wpq::Int& z : wpq::veronese(p).coords) ver.push_back(z.get_str());
    j["veronese"] = ver;
    if (!other.empty()) {
        wpq::WeightedPoint q(wpq::parse_rat_list(other), ws);
        j["equivalent"] = wpq::equivalent(p, q);
    }
    emit(c, j.dump(2));
    return 0;
}

// -------------------------------------------------------------------------
// count
// -------------------------------------------------------------------------

int run_count(const Common& c, const std::string& xlist, const std::string& method) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    std::vector<wpq::Rat> Xs = wpq::parse_rat_list(xlist);
    wpq::ReportMethods methods;
    if (method == "fast") {
        // default column set
    } else if (method == "direct" || method == "both") {
        methods.direct = true;
    } else if (method == "height") {
        methods.height = true;
    } else {
        throw std::invalid_argument("unknown --method: " + method);
    }
    if (method == "both") methods.height = false;

    auto records = wpq::asymptotic_report(ws, Xs, methods, parse_tol(c), c.budget, c.workers);
    if (!c.check.empty()) {
        for (const auto& rec : records) {
            wpq::Int direct = rec.direct_size
                                  ? *rec.direct_size
                                  : wpq::count_points_size(ws, rec.X, wpq::CountMethod::Direct,
                                                           c.budget, c.workers);
            if (direct != rec.fast_size)
                throw wpq::OracleMismatch("direct and fast size counts differ at X=" +
                                          rec.X.get_str());
        }
    }
    std::string fmt = c.format.empty() ? "csv" : c.format;
    if (fmt == "json") {
        json arr = json::array();
        for (const auto& r : records) {
            json j;
            j["X"] = r.X.get_str();
            if (r.direct_size) j["direct_size"] = r.direct_size->get_str();
            j["fast_size"] = r.fast_size.get_str();
            if (r.height_count) j["height_count"] = r.height_count->get_str();
            j["predicted_mid"] = wpq::mid_string(r.predicted);
            j["predicted_width"] = wpq::width_string(r.predicted);
            j["ratio_mid"] = wpq::mid_string(r.ratio);
            j["ratio_width"] = wpq::width_string(r.ratio);
            arr.push_back(j);
        }
        emit(c, arr.dump(2));
    } else {
        emit(c, wpq::count_records_csv(records));
    }
    return 0;
}

// -------------------------------------------------------------------------
// lift / fiber / sparsity / degree
// -------------------------------------------------------------------------

wpq::ProjectivePoint parse_target(const std::string& target) {
    std::vector<wpq::Int> v;
    for (const wpq::Rat& r : wpq::parse_rat_list(target)) {
        if (r.get_den() != 1)
            throw std::invalid_argument("target point must have integer coordinates");
        v.emplace_back(r.get_num());
    }
    return wpq::ProjectivePoint(std::move(v));
}

void verify_lift_result(const wpq::ProjectivePoint& y, const wpq::WeightSystem& ws,
                        const wpq::LiftResult& r, unsigned oracle_bound) {
    if (r.liftable) {
        if (!(wpq::veronese(*r.witness) == y))
            throw wpq::OracleMismatch("witness does not map back to the target");
    } else if (std::holds_alternative<wpq::CongruenceObstruction>(r.obstruction)) {
        const auto& ob = std::get<wpq::CongruenceObstruction>(r.obstruction);
        const auto& a = ob.residues[ob.bad_i];
        const auto& b = ob.residues[ob.bad_j];
        long g = static_cast<long>(std::gcd(a.modulus, b.modulus));
        if ((a.residue - b.residue) % g == 0)
            throw wpq::OracleMismatch("congruence certificate is not actually incompatible");
    }
    wpq::LiftResult oracle = wpq::lift_bruteforce_oracle(y, ws, oracle_bound);
    if (oracle.liftable != r.liftable)
        throw wpq::OracleMismatch("lift_check disagrees with the brute-force search");
}

int run_lift(const Common& c, const std::string& target, bool with_oracle,
             unsigned oracle_bound) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::ProjectivePoint y = parse_target(target);
    wpq::LiftResult r = wpq::lift_check(y, ws);
    json j = wpq::lift_result_json(r);
    if (with_oracle || !c.check.empty()) {
        try {
            wpq::LiftResult oracle = wpq::lift_bruteforce_oracle(y, ws, oracle_bound);
            j["oracle_agrees"] = oracle.liftable == r.liftable;
            if (!c.check.empty()) verify_lift_result(y, ws, r, oracle_bound);
        } catch (const wpq::BudgetExceeded&) {
            j["oracle"] = "budget-exceeded";
        }
    }
    emit(c, j.dump(2));
    return 0;
}

int run_fiber(const Common& c, const std::string& target) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::ProjectivePoint y = parse_target(target);
    auto fiber = wpq::fiber_rational_points(y, ws);
    if (!c.check.empty()) {
        for (const auto& p : fiber)
            if (!(wpq::veronese(p) == y))
                throw wpq::OracleMismatch("fiber point does not map to the target");
        bool liftable = wpq::lift_check(y, ws).liftable;
        if (liftable != !fiber.empty())
            throw wpq::OracleMismatch("fiber emptiness disagrees with lift_check");
    }
    json j;
    j["count"] = fiber.size();
    json pts = json::array();
    for (const auto& p : fiber) {
        json arr = json::array();
        for (const wpq::Rat& x : p.coords) arr.push_back(x.get_str());
        pts.push_back(arr);
    }
    j["points"] = pts;
    emit(c, j.dump(2));
    return 0;
}

int run_sparsity(const Common& c, unsigned long B) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::SparsityRecord rec = wpq::sparsity_scan(ws, B, c.budget, c.workers);
    if (!c.check.empty()) {
        // recount with the brute-force lift decision
        unsigned long long total = 0, liftable = 0;
        long long bb = static_cast<long long>(B);
        std::vector<long long> yv(ws.arity(), -bb);
        yv[0] = 0;
        while (true) {
            long long g = 0;
            int lead = 0;
            for (long long v : yv) {
                if (v != 0 && lead == 0) lead = v > 0 ? 1 : -1;
                g = std::gcd(g, v < 0 ? -v : v);
            }
            if (g == 1 && lead == 1) {
                std::vector<wpq::Int> coords;
                for (long long v : yv) coords.push_back(wpq::make_int(v));
                wpq::ProjectivePoint y(std::move(coords));
                ++total;
                if (wpq::lift_bruteforce_oracle(y, ws, 6).liftable) ++liftable;
            }
            std::size_t pos = ws.arity();
            while (pos > 1 && ++yv[pos - 1] > bb) {
                yv[pos - 1] = -bb;
                --pos;
            }
            if (pos == 1) {
                if (++yv[0] > bb) break;
                for (std::size_t i = 1; i < ws.arity(); ++i) yv[i] = -bb;
            }
        }
        if (total != rec.total || liftable != rec.liftable)
            throw wpq::OracleMismatch("sparsity scan disagrees with the brute-force recount");
    }
    emit(c, wpq::sparsity_json(rec).dump(2));
    return 0;
}

int run_degree(const Common& c, bool with_oracle) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::Int deg = wpq::veronese_degree(ws);
    json j;
    j["degree"] = deg.get_str();
    j["well_formed"] = ws.well_formed;
    if (with_oracle || !c.check.empty()) {
        try {
            unsigned long long orbits = wpq::orbit_count_oracle(ws, c.budget);
            j["oracle_agrees"] = wpq::make_int_u(orbits) == deg;
            if (!c.check.empty() && wpq::make_int_u(orbits) != deg)
                throw wpq::OracleMismatch("orbit count disagrees with the degree formula");
        } catch (const wpq::BudgetExceeded&) {
            j["oracle"] = "budget-exceeded";
        }
    }
    emit(c, j.dump(2));
    return 0;
}

// -------------------------------------------------------------------------
// constants
// -------------------------------------------------------------------------

struct FieldFlags {
    unsigned long m = 1, e = 1;
    std::string class_number = "1";
    std::string regulator = "1";
    unsigned long roots_of_unity = 2;
    std::string discriminant = "1";
    unsigned long real_embeddings = 1;
    unsigned long complex_embeddings = 0;
    std::string zeta_q;   // "lo,hi" enclosure of zeta_k(Q)
    std::string zeta_n1;  // "lo,hi" enclosure of zeta_K(n+1)
    unsigned long g = 1;
    unsigned long dim_w = 0;     // 0 means: use n
    unsigned long rank_pic = 1;
};

wpq::BoundedReal parse_enclosure(const std::string& s) {
    auto parts = wpq::parse_rat_list(s);
    if (parts.size() == 1) return wpq::BoundedReal::exact(parts[0]);
    if (parts.size() != 2) throw std::invalid_argument("enclosure must be 'lo,hi'");
    return wpq::BoundedReal(parts[0], parts[1]);
}

int run_constants(const Common& c, const FieldFlags& ff) {
    if (c.check == "paper") return run_paper_fixtures(c);
    wpq::WeightSystem ws = parse_ws(c);
    wpq::Rat tol = parse_tol(c);
    unsigned long n = ws.arity() - 1;

    wpq::FieldInvariants inv;
    inv.m = ff.m;
    inv.e = ff.e;
    inv.class_number = wpq::Int(ff.class_number);
    inv.regulator = wpq::parse_rat(ff.regulator);
    inv.roots_of_unity = ff.roots_of_unity;
    inv.discriminant_abs = wpq::Int(ff.discriminant);
    inv.real_embeddings = ff.real_embeddings;
    inv.complex_embeddings = ff.complex_embeddings;
    bool is_rational_field = inv.m * inv.e == 1;

    wpq::FieldInvariants inv_q = inv;   // zeta at Q, for the leading constant
    wpq::FieldInvariants inv_n1 = inv;  // zeta at n+1, for S_K(n)
    if (!ff.zeta_q.empty())
        inv_q.zeta_value = parse_enclosure(ff.zeta_q);
    else if (is_rational_field)
        inv_q.zeta_value = wpq::zeta(ws.Q, tol);
    else
        throw std::invalid_argument("--zeta-q required for fields beyond Q");
    if (!ff.zeta_n1.empty())
        inv_n1.zeta_value = parse_enclosure(ff.zeta_n1);
    else if (is_rational_field)
        inv_n1.zeta_value = wpq::zeta(n + 1, tol);
    else
        throw std::invalid_argument("--zeta-n1 required for fields beyond Q");

    json j;
    wpq::BoundedReal rational = wpq::rational_leading_constant(ws, tol);
    j["rational_leading"] = wpq::constant_json(rational, wpq::Rat(ws.Q),
                                               wpq::Rat(ws.Q - ws.min_weight()), 0);
    wpq::LeadingConstant nf = wpq::numberfield_leading_constant(ws, inv_q);
    wpq::Rat nf_err = wpq::Rat(nf.exponent) - wpq::Rat(1, inv.m);
    nf_err.canonicalize();
    j["numberfield_leading"] =
        wpq::constant_json(nf.constant, wpq::Rat(nf.exponent), nf_err, 1);
    j["schanuel"] = wpq::constant_json(wpq::schanuel_constant(n, inv_n1),
                                       wpq::Rat(inv.m * inv.e * (n + 1)),
                                       wpq::Rat(inv.m * inv.e * (n + 1)) - 1, 1);
    wpq::DegreeEConstant de = wpq::degree_e_constant_term(ws, inv_n1);
    j["degree_e"] = wpq::constant_json(de.constant, de.exponent, de.error_exponent, de.log_power);
    j["degree_e"]["geometric_divisor"] = de.geometric_divisor.get_str();
    j["degree_e"]["lemma_degree"] = de.lemma_degree.get_str();
    j["degree_e"]["divisor_mismatch"] = de.divisor_mismatch;
    j["sparsity_factor"] = wpq::sparsity_factor(ws.q, inv.m, inv.e).get_str();

    wpq::ComparisonReport cmp = wpq::comparison_constants(ws, tol);
    json jc;
    jc["deng"] = {{"constant_mid", wpq::mid_string(cmp.deng_constant)},
                  {"exponent", cmp.deng_exponent},
                  {"error_exponent", cmp.deng_error_exponent}};
    jc["artifact"] = {{"constant_mid", wpq::mid_string(cmp.artifact_constant)},
                      {"exponent", cmp.artifact_exponent},
                      {"error_exponent", cmp.artifact_error_exponent}};
    jc["morphism_count"] = {{"degree_e", cmp.morphism_degree_e},
                            {"exponent_T", cmp.morphism_exponent_T.get_str()},
                            {"exponent_X_equiv", cmp.morphism_exponent_X_equiv.get_str()}};
    j["comparison"] = jc;

    wpq::BoundsRecord br = wpq::bounds_evaluators(ff.g, inv.e, inv.m, ws.Q, n);
    j["bounds"] = {{"gamma_g", br.gamma_g.get_str()},
                   {"mu_g", br.mu_g.get_str()},
                   {"beta", br.beta.get_str()},
                   {"converges", br.converges}};
    unsigned long dim = ff.dim_w == 0 ? n : ff.dim_w;
    wpq::ExponentPredictors pred = wpq::growth_predictors(inv.m, dim, ff.rank_pic);
    j["predictors"] = {{"a_W", pred.a_W}, {"b_W", pred.b_W}};

    if (!c.check.empty() && is_rational_field) {
        if (!nf.constant.overlaps(rational))
            throw wpq::OracleMismatch("numberfield constant does not overlap the rational one");
        for (unsigned long q = 1; q <= 100; ++q)
            if (wpq::sparsity_factor(q, 1, 1) != 1)
                throw wpq::OracleMismatch("sparsity factor over Q must be 1");
    }
    emit(c, j.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted projective spaces over Q: heights, lifts, exact counts"};
    app.require_subcommand(1);

    Common c_height, c_point, c_count, c_lift, c_fiber, c_sparsity, c_degree, c_constants;
    std::string point, other_point, target, xlist, method = "fast";
    unsigned samples = 0;
    unsigned long bound = 10;
    unsigned oracle_bound = 6;
    bool with_oracle = false;
    FieldFlags ff;

    auto* cmd_height = app.add_subcommand("height", "Weighted, Archimedean, size and Weil heights");
    attach_common(cmd_height, c_height);
    cmd_height->add_option("-p,--point", point, "Point, e.g. 9,81,729/1,59049")->required();
    cmd_height->add_option("--samples", samples, "Random points for --check");

    auto* cmd_point = app.add_subcommand("point", "wgcd, normalization, canonical form, Veronese image");
    attach_common(cmd_point, c_point);
    cmd_point->add_option("-p,--point", point, "Point")->required();
    cmd_point->add_option("--equivalent-to", other_point, "Second point for an equivalence test");

    auto* cmd_count = app.add_subcommand("count", "Bounded-height point counts and ratios");
    attach_common(cmd_count, c_count);
    cmd_count->add_option("-X", xlist, "Height bound or comma list")->required();
    cmd_count->add_option("--method", method, "direct, fast, height or both");

    auto* cmd_lift = app.add_subcommand("lift", "Rational liftability under the Veronese map");
    attach_common(cmd_lift, c_lift);
    cmd_lift->add_option("-y,--target", target, "Projective target point")->required();
    cmd_lift->add_flag("--oracle", with_oracle, "Also run the brute-force search");
    cmd_lift->add_option("--exponent-bound", oracle_bound, "Brute-force exponent bound");

    auto* cmd_fiber = app.add_subcommand("fiber", "Rational points of a Veronese fiber");
    attach_common(cmd_fiber, c_fiber);
    cmd_fiber->add_option("-y,--target", target, "Projective target point")->required();

    auto* cmd_sparsity = app.add_subcommand("sparsity", "Density of liftable targets up to a bound");
    attach_common(cmd_sparsity, c_sparsity);
    cmd_sparsity->add_option("-B,--bound", bound, "Weil height bound")->required();

    auto* cmd_degree = app.add_subcommand("veronese-degree", "Degree of the Veronese morphism");
    cmd_degree->alias("degree");
    attach_common(cmd_degree, c_degree);
    cmd_degree->add_flag("--oracle", with_oracle, "Also run the orbit-counting oracle");

    auto* cmd_constants = app.add_subcommand("constants", "Leading constants and exponent reports");
    attach_common(cmd_constants, c_constants);
    cmd_constants->add_option("--m", ff.m, "Degree of k over Q");
    cmd_constants->add_option("--e", ff.e, "Relative degree");
    cmd_constants->add_option("--class-number", ff.class_number, "h_k");
    cmd_constants->add_option("--regulator", ff.regulator, "R_k (rational approximation)");
    cmd_constants->add_option("--roots-of-unity", ff.roots_of_unity, "w_k");
    cmd_constants->add_option("--discriminant", ff.discriminant, "|Delta_k|");
    cmd_constants->add_option("--real-embeddings", ff.real_embeddings, "r");
    cmd_constants->add_option("--complex-embeddings", ff.complex_embeddings, "s");
    cmd_constants->add_option("--zeta-q", ff.zeta_q, "Enclosure lo,hi of zeta_k(Q)");
    cmd_constants->add_option("--zeta-n1", ff.zeta_n1, "Enclosure lo,hi of zeta_K(n+1)");
    cmd_constants->add_option("--g", ff.g, "Subextension degree for the bound exponents");
    cmd_constants->add_option("--dim-w", ff.dim_w, "dim W for the growth predictors");
    cmd_constants->add_option("--rank-pic", ff.rank_pic, "rank Pic(W)");
    std::string field_shortcut;
    cmd_constants->add_option("--field", field_shortcut, "Field shortcut: 'q' for the rationals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (cmd_height->parsed()) return run_height(c_height, point, samples);
        if (cmd_point->parsed()) return run_point(c_point, point, other_point);
        if (cmd_count->parsed()) return run_count(c_count, xlist, method);
        if (cmd_lift->parsed()) return run_lift(c_lift, target, with_oracle, oracle_bound);
        if (cmd_fiber->parsed()) return run_fiber(c_fiber, target);
        if (cmd_sparsity->parsed()) return run_sparsity(c_sparsity, bound);
        if (cmd_degree->parsed()) return run_degree(c_degree, with_oracle);
        if (cmd_constants->parsed()) return run_constants(c_constants, ff);
    } catch (const wpq::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const wpq::OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
