#include "gwloc/cli.hpp"

#include "gwloc/cache.hpp"
#include "gwloc/fixed_graphs.hpp"
#include "gwloc/localization.hpp"
#include "gwloc/model.hpp"
#include "gwloc/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace gwloc {

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string format = "text";
    int jobs = 1;
    std::string cache_dir;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
    bool no_cache = false;
};

std::vector<std::uint64_t> seeds_for(const GlobalOptions& g) {
    const std::uint64_t base = g.seed.value_or(1);
    return {base, base + 1, base + 2};
}

std::string join(const std::vector<std::uint64_t>& values, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
    return os.str();
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json query_json(const CITarget& target) {
    auto degrees = target.degrees();
    std::sort(degrees.begin(), degrees.end());
    std::vector<int> powers;
    for (const auto& ins : target.insertions()) powers.push_back(ins.power);
    std::sort(powers.begin(), powers.end());
    return {{"ambient_dim", target.ambient_dim()},
            {"degrees", degrees},
            {"curve_degree", target.curve_degree()},
            {"insertions", powers}};
}

CITarget make_target(int n, const std::vector<int>& degrees, int d, const std::vector<int>& powers) {
    std::vector<Insertion> insertions;
    for (int p : powers) insertions.push_back({p});
    return CITarget(n, degrees, d, std::move(insertions));
}

/// Genus-zero invariant through the result cache.
class Genus0Service {
public:
    explicit Genus0Service(const GlobalOptions& g)
        : options_(g), cache_(ResultCache::resolve_dir(g.cache_dir.empty() ? std::nullopt
                                                                            : std::optional<std::string>(g.cache_dir))) {}

    CacheRecord get(const CITarget& target, bool& hit) {
        validate_query(target);
        const std::string key = ResultCache::make_key(target.canonical_key(), kEngineVersion);
        if (!options_.no_cache)
            if (auto record = cache_.lookup(key); record && record->engine_version == kEngineVersion) {
                hit = true;
                return *record;
            }
        hit = false;
        const EngineResult result = sum_invariant(target, seeds_for(options_), options_.jobs);
        CacheRecord record{key,          query_json(target), result.value,     result.weight_seeds,
                           result.graph_count, kEngineVersion, utc_timestamp()};
        if (!options_.no_cache) cache_.store(record);
        return record;
    }

    std::optional<CacheRecord> peek(const CITarget& target) const {
        return cache_.lookup(ResultCache::make_key(target.canonical_key(), kEngineVersion));
    }

private:
    GlobalOptions options_;
    ResultCache cache_;
};

void emit_genus0(const CacheRecord& r, bool hit, const GlobalOptions& g, std::ostream& out) {
    if (g.format == "json") {
        json doc{{"query", r.query},
                 {"value", rational_to_json(r.value)},
                 {"graph_count", r.graph_count},
                 {"seeds", r.seeds},
                 {"engine_version", r.engine_version}};
        out << doc.dump(2) << '\n';
    } else if (g.format == "csv") {
        out << "ambient_dim,degrees,curve_degree,insertions,num,den,graph_count,seeds,engine_version\n";
        out << r.query["ambient_dim"].get<int>() << ','
            << join_ints(r.query["degrees"].get<std::vector<int>>(), ";") << ','
            << r.query["curve_degree"].get<int>() << ','
            << join_ints(r.query["insertions"].get<std::vector<int>>(), ";") << ',' << r.value.numerator_str()
            << ',' << r.value.denominator_str() << ',' << r.graph_count << ',' << join(r.seeds, ";") << ','
            << r.engine_version << '\n';
    } else {
        out << "value: " << r.value << '\n';
        if (!g.quiet) {
            out << "graph_count: " << r.graph_count << '\n'
                << "seeds: " << join(r.seeds, ",") << '\n'
                << "engine_version: " << r.engine_version << '\n'
                << "cache: " << (hit ? "hit" : "miss") << '\n';
        }
    }
}

json optional_fraction(const std::optional<Rational>& r) { return r ? rational_to_json(*r) : json(nullptr); }

void emit_table1(const std::vector<QuinticTableRow>& rows, const GlobalOptions& g, std::ostream& out) {
    if (g.format == "json") {
        json doc = json::array();
        for (const auto& row : rows)
            doc.push_back({{"degree", row.degree},
                           {"reduced", rational_to_json(row.reduced_term)},
                           {"genus1_gw", rational_to_json(row.genus1_gw)},
                           {"genus1_bps", rational_to_json(row.genus1_bps)},
                           {"genus0_gw", rational_to_json(row.genus0_gw)},
                           {"genus0_bps", rational_to_json(row.genus0_bps)},
                           {"regenerated_genus1_gw", rational_to_json(row.regenerated_genus1_gw)},
                           {"regenerated_genus1_bps", rational_to_json(row.regenerated_genus1_bps)},
                           {"consistent", row.consistent},
                           {"corrected_genus1_gw", optional_fraction(row.corrected_genus1_gw)},
                           {"correction_via_reduced", optional_fraction(row.correction_via_reduced)},
                           {"correction_via_bps", optional_fraction(row.correction_via_bps)},
                           {"routes_agree", row.routes_agree}});
        out << json{{"rows", doc}, {"seeds", seeds_for(g)}, {"engine_version", kEngineVersion}}.dump(2) << '\n';
        return;
    }
    if (g.format == "csv") {
        out << "degree,reduced,genus1_gw,genus1_bps,genus0_gw,genus0_bps,consistent,corrected_genus1_gw\n";
        for (const auto& row : rows)
            out << row.degree << ',' << row.reduced_term << ',' << row.genus1_gw << ',' << row.genus1_bps << ','
                << row.genus0_gw << ',' << row.genus0_bps << ',' << (row.consistent ? "true" : "false") << ','
                << (row.corrected_genus1_gw ? row.corrected_genus1_gw->to_string() : "") << '\n';
        return;
    }
    out << "d\treduced\tN1\tn1\tN0\tn0\tstatus\n";
    for (const auto& row : rows)
        out << row.degree << '\t' << row.reduced_term << '\t' << row.genus1_gw << '\t' << row.genus1_bps << '\t'
            << row.genus0_gw << '\t' << row.genus0_bps << '\t' << (row.consistent ? "consistent" : "INCONSISTENT")
            << '\n';
    for (const auto& row : rows) {
        if (row.consistent) continue;
        out << "\nd=" << row.degree << ": published N1 = " << row.genus1_gw << " does not satisfy the identities\n"
            << "  N1 from N0/12 + reduced term: " << *row.correction_via_reduced << '\n'
            << "  N1 from the n1 expansion:     " << *row.correction_via_bps << '\n'
            << "  corrected N1 = " << *row.corrected_genus1_gw
            << (row.routes_agree ? " (routes agree)" : " (ROUTES DISAGREE)") << '\n';
    }
}

void emit_degree_table(const DegreeTable& table, const std::string& name, const json& header,
                       const GlobalOptions& g, std::ostream& out) {
    if (g.format == "json") {
        json entries = json::array();
        for (const auto& [d, v] : table) entries.push_back({{"degree", d}, {"value", rational_to_json(v)}});
        json doc = header;
        doc["entries"] = entries;
        out << doc.dump(2) << '\n';
    } else if (g.format == "csv") {
        out << "degree,num,den\n";
        for (const auto& [d, v] : table) out << d << ',' << v.numerator_str() << ',' << v.denominator_str() << '\n';
    } else {
        out << "d\t" << name << '\n';
        for (const auto& [d, v] : table) out << d << '\t' << v << '\n';
    }
}

DegreeTable truncate(const DegreeTable& table, int max_degree, const std::string& what) {
    if (max_degree <= 0) return table;
    DegreeTable out;
    for (int d = 1; d <= max_degree; ++d) {
        const auto it = table.find(d);
        if (it == table.end()) throw InvalidInput(what + " has no entry for degree " + std::to_string(d));
        out.emplace(d, it->second);
    }
    return out;
}

} // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const DimensionMismatch*>(&e)) return kExitDimensionMismatch;
    if (dynamic_cast<const WeightIndependenceFailure*>(&e) || dynamic_cast<const DegenerateWeights*>(&e))
        return kExitEngineFailure;
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact genus-zero localization and genus-one relations for complete intersections", "gwloc"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", g.jobs, "Worker threads for graph sums (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory (overrides GW_CACHE_DIR)");
    app.add_option("--seed", g.seed, "First weight seed; seeds s, s+1, s+2 are used");
    app.add_flag("--quiet", g.quiet, "Print only the value");
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the result cache");

    int ambient_dim = 0, curve_degree = 0, max_degree = 0, genus = 0, marks = 0, c1a = 0, half_dim = 0;
    std::vector<int> degrees, insertions;
    std::optional<int> bundle_c1a;
    std::string table_file, n0_file, n1_file;
    bool n1_from_table1 = false;

    auto* genus0_cmd = app.add_subcommand("genus0", "Genus-zero invariant of a complete intersection");
    genus0_cmd->add_option("--ambient-dim", ambient_dim, "n for P^n")->required()->check(CLI::PositiveNumber);
    genus0_cmd->add_option("--degrees", degrees, "Bundle degrees a_1,...,a_m")->delimiter(',');
    genus0_cmd->add_option("--curve-degree", curve_degree, "Curve degree d")->required()->check(CLI::PositiveNumber);
    genus0_cmd->add_option("--insertions", insertions, "Hyperplane powers, one per marked point")->delimiter(',');

    auto* table1_cmd = app.add_subcommand("table1", "Rebuild and audit the low-degree quintic table");
    table1_cmd->add_option("--max-degree", max_degree, "Largest degree (1..4)")->required()->check(CLI::Range(1, 4));
    table1_cmd->add_option("--table-file", table_file, "Alternative published-table record");

    auto* bps_cmd = app.add_subcommand("bps", "Instanton numbers from GW invariants");
    bps_cmd->add_option("--genus", genus, "0 or 1")->required()->check(CLI::Range(0, 1));
    bps_cmd->add_option("--max-degree", max_degree, "Largest degree (default: all available)");
    bps_cmd->add_option("--n0-file", n0_file, "N0 table file (d value per line)");
    bps_cmd->add_option("--n1-file", n1_file, "N1 table file (d value per line)");
    bps_cmd->add_flag("--n1-from-table1", n1_from_table1, "Use the published N1 row as genus-one input");
    bps_cmd->add_option("--ambient-dim", ambient_dim, "Target for cached N0 lookup (default 4)");
    bps_cmd->add_option("--degrees", degrees, "Target bundle degrees for cached N0 lookup (default 5)")->delimiter(',');

    auto* dims_cmd = app.add_subcommand("dims", "Expected dimension of a moduli space");
    dims_cmd->add_option("--genus", genus, "Genus (0 or 1)")->required();
    dims_cmd->add_option("--marks", marks, "Number of marked points")->check(CLI::NonNegativeNumber);
    dims_cmd->add_option("--c1a", c1a, "<c1(TX), A>");
    dims_cmd->add_option("--half-dim", half_dim, "Complex dimension of X")->required();
    dims_cmd->add_option("--bundle-c1a", bundle_c1a, "<c1(L), A> for the bundle-reduced dimension");

    auto* wdvv_cmd = app.add_subcommand("wdvv", "Rational plane curve counts by recursion");
    wdvv_cmd->add_option("--max-degree", max_degree, "Largest degree")->required()->check(CLI::PositiveNumber);

    auto* graphs_cmd = app.add_subcommand("graphs", "Dump fixed-locus graphs (canonical form, aut order)");
    graphs_cmd->add_option("--ambient-dim", ambient_dim, "n for P^n")->required()->check(CLI::PositiveNumber);
    graphs_cmd->add_option("--curve-degree", curve_degree, "Curve degree d")->required()->check(CLI::PositiveNumber);
    graphs_cmd->add_option("--marks", marks, "Number of marked points")->check(CLI::NonNegativeNumber);

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    std::vector<std::string> argv_storage{"gwloc"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*genus0_cmd) {
            Genus0Service service(g);
            bool hit = false;
            const CacheRecord r = service.get(make_target(ambient_dim, degrees, curve_degree, insertions), hit);
            emit_genus0(r, hit, g, out);
            return kExitOk;
        }
        if (*table1_cmd) {
            const Table1Data data = table_file.empty() ? builtin_table1() : load_table1_file(table_file);
            Genus0Service service(g);
            const auto rows = reproduce_table1(max_degree, data.reduced, data.genus1_gw, data.genus1_bps, [&](int d) {
                bool hit = false;
                return service.get(CITarget(4, {5}, d), hit).value;
            });
            emit_table1(rows, g, out);
            return kExitOk;
        }
        if (*bps_cmd) {
            DegreeTable n0_input;
            if (!n0_file.empty()) {
                n0_input = truncate(parse_degree_table(read_file(n0_file)), max_degree, "N0 file");
            } else {
                if (max_degree <= 0) throw InvalidInput("--max-degree is required when N0 comes from the cache");
                Genus0Service service(g);
                const int n = ambient_dim > 0 ? ambient_dim : 4;
                const std::vector<int> bundle = degrees.empty() ? std::vector<int>{5} : degrees;
                for (int d = 1; d <= max_degree; ++d) {
                    const auto record = service.peek(CITarget(n, bundle, d));
                    if (!record)
                        throw InvalidInput("missing input: no cached N0 for degree " + std::to_string(d) +
                                           " (run genus0 first or pass --n0-file)");
                    n0_input[d] = record->value;
                }
            }
            const BPSTable bps0 = bps0_from_gw0(n0_input);
            if (genus == 0) {
                emit_degree_table(bps0.entries, "n0", json{{"genus", 0}}, g, out);
                return kExitOk;
            }
            DegreeTable n1_input;
            if (!n1_file.empty()) n1_input = parse_degree_table(read_file(n1_file));
            else if (n1_from_table1) n1_input = builtin_table1().genus1_gw;
            else throw InvalidInput("missing input: genus 1 needs --n1-file or --n1-from-table1");
            n1_input = truncate(n1_input, static_cast<int>(n0_input.size()), "N1 input");
            emit_degree_table(bps1_from_gw1(n1_input, bps0).entries, "n1", json{{"genus", 1}}, g, out);
            return kExitOk;
        }
        if (*dims_cmd) {
            const long dim = expected_dimension(DimensionQuery{genus, marks, c1a, half_dim, bundle_c1a});
            if (g.format == "json") out << json{{"expected_dimension", dim}}.dump() << '\n';
            else if (g.format == "csv") out << "expected_dimension\n" << dim << '\n';
            else out << dim << '\n';
            return kExitOk;
        }
        if (*wdvv_cmd) {
            emit_degree_table(wdvv_p2(max_degree), "N", json{{"surface", "P2"}}, g, out);
            return kExitOk;
        }
        if (*graphs_cmd) {
            write_graph_dump(out, ambient_dim, curve_degree, marks);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kExitUsage;
}

} // namespace gwloc
