#include "swc/cli.hpp"

#include "swc/bounds.hpp"
#include "swc/constructions.hpp"
#include "swc/error.hpp"
#include "swc/json_io.hpp"
#include "swc/pte.hpp"
#include "swc/search.hpp"
#include "swc/xray.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace swc::cli {

using nlohmann::json;

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::InvalidInput: return "invalid-input";
        case Status::Inconclusive: return "inconclusive";
        case Status::InternalError: return "internal-error";
    }
    return "?";
}

int exit_code(Status s) noexcept {
    switch (s) {
        case Status::Ok: return 0;
        case Status::InvalidInput: return 2;
        case Status::Inconclusive: return 3;
        case Status::InternalError: return 4;
    }
    return 4;
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidParameter, what); }

std::vector<Int> parse_int_list(const std::string& text, char sep = ',') {
    std::vector<Int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(sep, start);
        const std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            bad("cannot parse integer list '" + text + "'");
        }
        out.push_back(v);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

Grid parse_grid(const std::string& extents, const std::string& offset) {
    std::string normalized = extents;
    for (char& c : normalized) {
        if (c == 'X') c = 'x';
    }
    std::vector<Int> ext = parse_int_list(normalized, 'x');
    if (offset.empty()) return Grid(std::move(ext));
    std::vector<Int> off = parse_int_list(offset);
    if (off.size() != ext.size()) bad("--offset needs one entry per grid axis");
    return Grid(std::move(ext), std::move(off));
}

DirectionSet load_direction_set(const std::string& path) {
    io::RawDirections raw = io::directions_from_json(io::read_json_file(path));
    return validate_direction_set(std::move(raw.directions), raw.d);
}

json big_to_json(const BigInt& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(to_decimal(v));
}

json log2_to_json(const Log2Interval& v) { return json::array({v.lo, v.hi}); }

json report_to_json(const PigeonholeReport& r) {
    json chain = json::array();
    for (const auto& link : r.chain) {
        chain.push_back({{"name", link.name},
                         {"direction", link.direction ? json(*link.direction) : json(nullptr)},
                         {"status", swc::to_string(link.status)},
                         {"method", swc::to_string(link.method)}});
    }
    auto opt_big = [](const std::optional<BigInt>& v) { return v ? json(to_decimal(*v)) : json(nullptr); };
    return json{
        {"m", r.m},
        {"d", r.d},
        {"epsilon", r.epsilon.str()},
        {"n", r.n},
        {"n_from_theorem", r.n_from_theorem},
        {"k", r.k},
        {"directions", io::directions_to_json(r.directions, r.d)},
        {"line_counts", r.line_counts},
        {"total_lines", r.total_lines},
        {"profile_bound", {{"exact", opt_big(r.profile_bound.exact)}, {"log2", log2_to_json(r.profile_bound.log2)}}},
        {"subset_count", {{"exact", opt_big(r.subset_count)}, {"log2", log2_to_json(r.subset_log2)}}},
        {"verdict", swc::to_string(r.verdict)},
        {"verdict_method", swc::to_string(r.verdict_method)},
        {"existence_implied", r.verdict == Verdict::GhostGuaranteed},
        {"chain", std::move(chain)},
        {"paper_chain_holds", r.paper_chain_holds},
        {"n_pow_2l", opt_big(r.n_pow_2l)},
        {"two_pow_half", opt_big(r.two_pow_half)},
        {"log2_n_pow_2l", log2_to_json(r.log2_n_pow_2l)},
    };
}

json ghost_to_json(const GhostPair& g) {
    return io::ghost_pair_to_json(g.first, g.second, g.directions.directions(), g.directions.dim(), true);
}

json witness_to_json(const std::optional<EquivalenceWitness>& w) {
    if (!w) return nullptr;
    return json{{"direction", io::direction_to_json(w->direction)},
                {"key", w->key},
                {"count_F", w->first_count},
                {"count_G", w->second_count}};
}

struct Globals {
    std::string output;
    std::optional<std::int64_t> seed;
    unsigned threads = 1;
    bool pretty = false;
};

struct Outcome {
    Status status = Status::Ok;
    json payload;
    std::vector<std::string> diagnostics;
};

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
    CommandResult result;
    for (const auto& a : args) {
        if (a == "--version") {
            result.payload = json{{"tool", "swcomp"}, {"version", kToolVersion}, {"schema_version", kSchemaVersion}};
            return result;
        }
    }

    CLI::App app{"Switching components, X-ray line counts, pigeonhole certificates and PTE solutions", "swcomp"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--output", g.output, "Write the JSON payload to this path instead of stdout");
    app.add_option("--seed", g.seed, "Seed recorded for randomized helper steps");
    app.add_option("--threads", g.threads, "Worker threads for search and census engines")->check(CLI::Range(1U, 256U));
    app.add_flag("--pretty", g.pretty, "Indent JSON output");

    std::function<Outcome()> handler;
    auto bind = [&](CLI::App* sub, std::function<Outcome()> fn) { sub->callback([&handler, fn] { handler = fn; }); };

    // xray
    std::string points_path, direction_text;
    {
        auto* sub = app.add_subcommand("xray", "X-ray of a configuration in one direction");
        sub->add_option("--points", points_path, "Configuration JSON")->required();
        sub->add_option("--direction", direction_text, "Direction a,b[,c...]")->required();
        bind(sub, [&] {
            const PointConfiguration F = io::configuration_from_json(io::read_json_file(points_path));
            const Direction s = canonicalize_direction(parse_int_list(direction_text));
            return Outcome{Status::Ok, io::to_json(xray(F, s)), {}};
        });
    }

    // verify-ghost
    std::string pair_path = "-";
    {
        auto* sub = app.add_subcommand("verify-ghost", "Check a ghost pair (reads stdin by default)");
        sub->add_option("--pair", pair_path, "Ghost pair JSON, '-' for stdin");
        bind(sub, [&] {
            io::RawGhostPair raw = io::ghost_pair_from_json(io::read_json_file(pair_path));
            const DirectionSet S = validate_direction_set(raw.directions.directions, raw.directions.d);
            const GhostCheck c = check_ghost_pair(raw.first, raw.second, S.directions());
            json out = io::ghost_pair_to_json(raw.first, raw.second, S.directions(), S.dim(), c.valid());
            out["checks"] = {{"same_dimension", c.same_dimension},
                             {"equal_cardinality", c.equal_cardinality},
                             {"disjoint", c.disjoint},
                             {"nonempty", c.nonempty},
                             {"equivalent", c.equivalence.equivalent}};
            out["witness"] = witness_to_json(c.equivalence.witness);
            return Outcome{Status::Ok, std::move(out), {}};
        });
    }

    // construct
    std::string dirs_path;
    Int polygon_m = 0;
    {
        auto* construct = app.add_subcommand("construct", "Explicit switching-component constructions");
        construct->require_subcommand(1);

        auto* hyper = construct->add_subcommand("hypercube", "Two-colouring of {0,1}^m projected by S");
        hyper->add_option("--directions", dirs_path, "Direction set JSON")->required();
        bind(hyper, [&] {
            const HypercubeGhost h = hypercube_ghost(load_direction_set(dirs_path));
            json out = ghost_to_json(h.pair);
            out["m"] = h.pair.directions.size();
            out["cancelled_size"] = h.pair.first.cardinality();
            out["raw"] = {{"even", io::to_json(h.raw_even)}, {"odd", io::to_json(h.raw_odd)}};
            return Outcome{Status::Ok, std::move(out), {}};
        });

        auto* poly = construct->add_subcommand("polygon", "Alternate vertices of the regular 2m-gon");
        poly->add_option("--m", polygon_m, "Number of directions")->required();
        bind(poly, [&] {
            if (polygon_m < 2 || polygon_m > 100000) bad("--m must be in [2, 100000]");
            const PolygonPairingCertificate cert = polygon_ghost(static_cast<int>(polygon_m));
            json classes = json::array();
            for (const auto& cls : cert.classes) {
                json pairs = json::array();
                for (const auto& [i, j] : cls.pairs) pairs.push_back({i, j});
                classes.push_back({{"residue", cls.residue}, {"pairs", std::move(pairs)}});
            }
            const double defect = polygon_parallelism_defect(cert);
            json out{{"m", cert.m},
                     {"classes", std::move(classes)},
                     {"verified", verify_polygon_pairing(cert)},
                     {"numeric_defect", defect},
                     {"numeric_ok", defect <= 1e-9}};
            return Outcome{Status::Ok, std::move(out), {}};
        });

        auto* paper = construct->add_subcommand("paper-example", "The 6-point ghost for five planar directions");
        bind(paper, [&] { return Outcome{Status::Ok, ghost_to_json(paper_example_m5()), {}}; });
    }

    // select-directions
    Int sel_m = 0, sel_d = 0;
    {
        auto* sub = app.add_subcommand("select-directions", "First m primitive tuples of {1..q}^d");
        sub->add_option("--m", sel_m)->required();
        sub->add_option("--d", sel_d)->required();
        bind(sub, [&] {
            if (sel_d < 2 || sel_d > 16) bad("--d must be in [2, 16]");
            const DirectionSelection s = select_directions(sel_m, static_cast<std::size_t>(sel_d));
            json out{{"m", sel_m},
                     {"d", sel_d},
                     {"q_initial", s.q_initial},
                     {"q_used", s.q_used},
                     {"initial_q_sufficed", s.initial_q_sufficed()},
                     {"q_increments", s.q_increments},
                     {"replaced_with_units", s.replaced_with_units},
                     {"directions", io::directions_to_json(s.directions.directions(), s.directions.dim())}};
            return Outcome{Status::Ok, std::move(out), {}};
        });
    }

    // coprime-census
    Int census_p = 0, census_d = 0;
    bool census_enumerate = false;
    {
        auto* sub = app.add_subcommand("coprime-census", "Relatively prime d-tuples in {1..p}^d");
        sub->add_option("--p", census_p)->required();
        sub->add_option("--d", census_d)->required();
        sub->add_flag("--verify-enumeration", census_enumerate, "Also count by gcd enumeration");
        bind(sub, [&] {
            if (census_d < 2 || census_d > 64) bad("--d must be in [2, 64]");
            const auto d = static_cast<std::size_t>(census_d);
            const CoprimeCensus c = coprime_census(census_p, d);
            const ZetaReport z = zeta_lower_check(census_p, d);
            json out{{"p", c.p},
                     {"d", c.d},
                     {"count", big_to_json(c.count)},
                     {"total", big_to_json(c.total)},
                     {"density", {{"num", big_to_json(c.density.get_num())}, {"den", big_to_json(c.density.get_den())}}},
                     {"density_float", z.density},
                     {"zeta",
                      {{"exceeds_half", z.exceeds_half},
                       {"inverse_zeta", z.inverse_zeta},
                       {"deviation", z.deviation},
                       {"zeta_error", z.zeta_error}}}};
            Outcome o{Status::Ok, {}, {}};
            if (census_enumerate) {
                const BigInt e = coprime_count_by_enumeration(census_p, d, g.threads);
                out["enumeration_count"] = big_to_json(e);
                if (e != c.count) throw Error(ErrorCode::InternalError, "enumeration disagrees with Mobius count");
            }
            o.payload = std::move(out);
            return o;
        });
    }

    // count-lines
    Int cl_n = 0, cl_d = 0;
    std::string cl_dir;
    {
        auto* sub = app.add_subcommand("count-lines", "Lines parallel to s meeting {1..n}^d");
        sub->add_option("--direction", cl_dir)->required();
        sub->add_option("--n", cl_n)->required();
        sub->add_option("--d", cl_d)->required();
        bind(sub, [&] {
            if (cl_d < 2 || cl_d > 64) bad("--d must be in [2, 64]");
            const Direction s = canonicalize_direction(parse_int_list(cl_dir));
            const auto d = static_cast<std::size_t>(cl_d);
            return Outcome{Status::Ok,
                           json{{"exact", count_lines_exact(s, cl_n, d)}, {"lemma1_bound", count_lines_bound(s, cl_n, d)}},
                           {}};
        });
    }

    // bounds
    Int b_m = 0, b_d = 0, b_n = 0, b_from = 0, b_to = 0;
    std::string b_eps, b_dirs;
    std::uint64_t bit_cap = kDefaultExactBitCap;
    {
        auto* bounds = app.add_subcommand("bounds", "Pigeonhole counting certificates");
        bounds->require_subcommand(1);

        auto* cert = bounds->add_subcommand("certificate", "Evaluate the counting argument at one (m, d, eps)");
        cert->add_option("--m", b_m)->required();
        cert->add_option("--d", b_d)->required();
        cert->add_option("--epsilon", b_eps, "Positive rational P/Q")->required();
        auto* dirs_opt = cert->add_option("--directions", b_dirs, "Direction set JSON (default: selected)");
        auto* n_opt = cert->add_option("--n", b_n, "Even grid side (default: from m, d, eps)");
        cert->add_option("--bit-cap", bit_cap, "Largest exact integer, in bits");
        bind(cert, [&, dirs_opt, n_opt] {
            if (b_d < 2 || b_d > 16) bad("--d must be in [2, 16]");
            CertificateOptions opt;
            opt.exact_bit_cap = bit_cap;
            if (*dirs_opt) opt.directions = load_direction_set(b_dirs);
            if (*n_opt) opt.n = b_n;
            const PigeonholeReport r =
                pigeonhole_certificate(b_m, static_cast<std::size_t>(b_d), PositiveRational::parse(b_eps), opt);
            Outcome o{r.verdict == Verdict::Inconclusive ? Status::Inconclusive : Status::Ok, report_to_json(r), {}};
            return o;
        });

        auto* scan = bounds->add_subcommand("scan", "Certificate verdicts over a range of m");
        scan->add_option("--d", b_d)->required();
        scan->add_option("--epsilon", b_eps)->required();
        scan->add_option("--m-from", b_from)->required();
        scan->add_option("--m-to", b_to)->required();
        scan->add_option("--bit-cap", bit_cap);
        bind(scan, [&] {
            if (b_d < 2 || b_d > 16) bad("--d must be in [2, 16]");
            const PositiveRational eps = PositiveRational::parse(b_eps);
            const auto rows = guaranteed_threshold_scan(static_cast<std::size_t>(b_d), eps, b_from, b_to, bit_cap);
            json jrows = json::array();
            bool monotone = true;
            for (const auto& row : rows) {
                monotone = monotone && row.n_nondecreasing;
                jrows.push_back({{"m", row.m},
                                 {"n", row.n},
                                 {"total_lines", row.total_lines},
                                 {"verdict", swc::to_string(row.verdict)},
                                 {"method", swc::to_string(row.method)},
                                 {"existence_implied", row.verdict == Verdict::GhostGuaranteed},
                                 {"log2_profile", log2_to_json(row.log2_profile)},
                                 {"log2_subset", log2_to_json(row.log2_subset)},
                                 {"n_nondecreasing", row.n_nondecreasing},
                                 {"paper_chain_holds", row.paper_chain_holds},
                                 {"note", row.note}});
            }
            json out{{"d", b_d}, {"epsilon", eps.str()}, {"rows", std::move(jrows)}, {"n_monotone", monotone}};
            return Outcome{Status::Ok, std::move(out), {}};
        });
    }

    // search
    std::string s_grid, s_offset, s_points;
    Int s_kmax = 0;
    std::uint64_t budget = 100'000'000;
    {
        auto* search = app.add_subcommand("search", "Exhaustive grid searches");
        search->require_subcommand(1);

        auto* mg = search->add_subcommand("min-ghost", "Smallest ghost inside a grid");
        mg->add_option("--directions", dirs_path)->required();
        mg->add_option("--grid", s_grid, "Extents, e.g. 6x5")->required();
        mg->add_option("--offset", s_offset, "Lowest corner a,b (default all ones)");
        mg->add_option("--kmax", s_kmax)->required();
        mg->add_option("--budget", budget, "Node budget");
        bind(mg, [&] {
            const DirectionSet S = load_direction_set(dirs_path);
            SearchOptions opt;
            opt.node_budget = budget;
            opt.threads = g.threads;
            const SearchOutcome r = min_ghost(S, parse_grid(s_grid, s_offset), s_kmax, opt);
            json out{{"minimal_size", r.minimal_size ? json(*r.minimal_size) : json(nullptr)},
                     {"witness", r.witness ? ghost_to_json(*r.witness) : json(nullptr)},
                     {"exhausted", r.exhausted},
                     {"nodes_explored", r.nodes_explored},
                     {"k_max", r.k_max}};
            return Outcome{r.exhausted ? Status::Ok : Status::Inconclusive, std::move(out), r.warnings};
        });

        auto* uq = search->add_subcommand("unique", "Is a set the only one in the grid with its X-rays?");
        uq->add_option("--points", s_points)->required();
        uq->add_option("--directions", dirs_path)->required();
        uq->add_option("--grid", s_grid)->required();
        uq->add_option("--offset", s_offset);
        uq->add_option("--budget", budget);
        bind(uq, [&] {
            const PointConfiguration F = io::configuration_from_json(io::read_json_file(s_points));
            const io::RawDirections raw = io::directions_from_json(io::read_json_file(dirs_path));
            if (raw.d != F.dim()) throw Error(ErrorCode::DimensionError, "points and directions differ in dimension");
            SearchOptions opt;
            opt.node_budget = budget;
            const UniquenessResult r = uniqueness_check(F, raw.directions, parse_grid(s_grid, s_offset), opt);
            json alts = json::array();
            for (const auto& a : r.alternatives) alts.push_back(io::to_json(a));
            json out{{"unique", r.unique},
                     {"alternatives", std::move(alts)},
                     {"exhausted", r.exhausted},
                     {"nodes_explored", r.nodes_explored}};
            return Outcome{r.exhausted ? Status::Ok : Status::Inconclusive, std::move(out), {}};
        });

        auto* ug = search->add_subcommand("ugon", "Lattice U-gon check");
        ug->add_option("--points", s_points)->required();
        ug->add_option("--directions", dirs_path)->required();
        bind(ug, [&] {
            const PointConfiguration V = io::configuration_from_json(io::read_json_file(s_points));
            const io::RawDirections raw = io::directions_from_json(io::read_json_file(dirs_path));
            const UgonReport r = ugon_check(V, raw.directions);
            json nv = json::array();
            for (const auto& p : r.non_vertices) nv.push_back(io::point_to_json(p));
            json viol = json::array();
            for (const auto& v : r.violations) {
                viol.push_back({{"vertex", io::point_to_json(v.vertex)}, {"direction", io::direction_to_json(v.direction)}});
            }
            json out{{"is_ugon", r.is_ugon},
                     {"convex_position", r.convex_position},
                     {"non_vertices", std::move(nv)},
                     {"violations", std::move(viol)}};
            return Outcome{Status::Ok, std::move(out), {}};
        });
    }

    // pte
    std::string sol_path, alpha_text;
    {
        auto* pte = app.add_subcommand("pte", "Prouhet-Tarry-Escott solutions");
        pte->require_subcommand(1);

        auto* fg = pte->add_subcommand("from-ghost", "Planar ghost pair to a PTE_2 solution");
        fg->add_option("--pair", pair_path, "Ghost pair JSON, '-' for stdin");
        bind(fg, [&] {
            io::RawGhostPair raw = io::ghost_pair_from_json(io::read_json_file(pair_path));
            DirectionSet S = validate_direction_set(raw.directions.directions, raw.directions.d);
            if (!check_ghost_pair(raw.first, raw.second, S.directions()).valid()) {
                bad("pair is not a switching component for its directions");
            }
            const GhostPair pair{std::move(raw.first), std::move(raw.second), std::move(S)};
            return Outcome{Status::Ok, io::to_json(ghost_to_pte2(pair)), {}};
        });

        auto* vf = pte->add_subcommand("verify", "Check every power-sum identity");
        vf->add_option("--solution", sol_path, "Solution JSON, '-' for stdin")->required();
        bind(vf, [&] {
            const PTECheck c = verify_pte(io::pte_from_json(io::read_json_file(sol_path)));
            json out{{"valid", c.valid},
                     {"distinct", c.distinct},
                     {"well_formed", c.well_formed},
                     {"identities_checked", c.identities_checked},
                     {"violated_exponent", c.violated_exponent ? json(*c.violated_exponent) : json(nullptr)}};
            return Outcome{Status::Ok, std::move(out), {}};
        });

        auto* rd = pte->add_subcommand("reduce", "Map a PTE_2 solution to PTE_1 by a linear functional");
        rd->add_option("--solution", sol_path)->required();
        rd->add_option("--alpha", alpha_text, "a1,a2 or 'suggest'")->required();
        bind(rd, [&] {
            const PTESolution sol = io::pte_from_json(io::read_json_file(sol_path));
            Outcome o;
            std::array<Int, 2> alpha{};
            if (alpha_text == "suggest") {
                alpha = suggest_alpha(sol);
                o.diagnostics.push_back("alpha chosen heuristically: (1, spread + 1)");
            } else {
                const auto v = parse_int_list(alpha_text);
                if (v.size() != 2) bad("--alpha needs exactly two integers");
                alpha = {v[0], v[1]};
            }
            json out = io::to_json(reduce_to_pte1(sol, alpha));
            out["alpha"] = alpha;
            o.payload = std::move(out);
            return o;
        });
    }

    std::vector<const char*> argv{"swcomp"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            result.diagnostics.push_back(app.help());
            return result;
        } catch (const CLI::CallForAllHelp&) {
            result.diagnostics.push_back(app.help("", CLI::AppFormatMode::All));
            return result;
        } catch (const CLI::ParseError& e) {
            result.status = Status::InvalidInput;
            result.diagnostics.push_back(e.what());
            result.diagnostics.push_back(app.help());
            result.payload = json{{"status", to_string(result.status)}, {"error", {{"code", "UsageError"}, {"message", e.what()}}}};
            return result;
        }
        result.output_path = g.output;
        result.pretty = g.pretty;
        if (g.seed) result.diagnostics.push_back("seed " + std::to_string(*g.seed) + " recorded (command is deterministic)");
        if (!handler) throw Error(ErrorCode::InternalError, "no command selected");
        Outcome o = handler();
        result.status = o.status;
        result.payload = std::move(o.payload);
        result.diagnostics.insert(result.diagnostics.end(), o.diagnostics.begin(), o.diagnostics.end());
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::InternalError: result.status = Status::InternalError; break;
            case ErrorCode::ResourceLimit: result.status = Status::Inconclusive; break;
            default: result.status = Status::InvalidInput; break;
        }
        result.diagnostics.push_back(e.what());
        result.payload = json{{"status", to_string(result.status)},
                              {"error", {{"code", swc::to_string(e.code())}, {"message", e.what()}}}};
    } catch (const std::exception& e) {
        result.status = Status::InternalError;
        result.diagnostics.push_back(e.what());
        result.payload = json{{"status", to_string(result.status)}, {"error", {{"code", "InternalError"}, {"message", e.what()}}}};
    }
    return result;
}

std::string render(const CommandResult& result) {
    if (result.payload.is_null()) return {};
    return result.payload.dump(result.pretty ? 2 : -1) + "\n";
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CommandResult r = dispatch(args);
    for (const auto& d : r.diagnostics) std::cerr << d << "\n";
    const std::string text = render(r);
    if (!text.empty()) {
        if (r.output_path.empty() || r.status != Status::Ok) {
            std::cout << text;
        } else {
            std::ofstream out(r.output_path);
            if (!out) {
                std::cerr << "cannot write '" << r.output_path << "'\n";
                return exit_code(Status::InvalidInput);
            }
            out << text;
        }
    }
    return exit_code(r.status);
}

}  // namespace swc::cli
