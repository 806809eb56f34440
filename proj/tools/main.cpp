#include "permpat/catalog.hpp"
#include "permpat/dyck.hpp"
#include "permpat/genome.hpp"
#include "permpat/oracle.hpp"
#include "permpat/pegperm.hpp"
#include "permpat/perm.hpp"
#include "permpat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::json;
using namespace permpat;

namespace {

struct Output {
    std::string format = "text";  // text | json | csv | bfile
    std::string path;             // empty: stdout

    void write(const std::string& text_body, const json& j,
               const std::vector<std::pair<long long, std::string>>& table) const {
        std::ostringstream body;
        if (format == "json") {
            body << j.dump(2) << "\n";
        } else if (format == "bfile") {
            for (const auto& [n, v] : table) body << n << " " << v << "\n";
        } else if (format == "csv") {
            body << "n,value\n";
            for (const auto& [n, v] : table) body << n << "," << v << "\n";
        } else {
            body << text_body;
        }
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file " + path);
            out << body.str();
        }
    }
};

int default_workers() {
    if (const char* env = std::getenv("PERMPAT_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
    cmd->add_option("--out", out.path, "Write output to a file instead of stdout");
}

json gf_to_json(const RatGF& gf) {
    json num = json::array();
    for (const auto& c : gf.numer) num.push_back(c.to_string());
    return json{{"numerator", num}, {"denominator_power", gf.denom_pow}};
}

json polyclass_to_json(const PolyclassResult& res, int order) {
    json j;
    json part = json::array();
    for (const auto& cls : res.partition) {
        json basis = json::array();
        for (const auto& b : cls.allowed.forbidden_basis) basis.push_back(b);
        part.push_back(json{{"peg", cls.peg.to_string()}, {"forbidden_basis", basis}});
    }
    j["partition"] = part;
    j["gf"] = gf_to_json(res.gf);
    json coeffs = json::array();
    for (const auto& c : res.poly.binomial_coeffs) coeffs.push_back(c.to_string());
    j["binomial_coefficients"] = coeffs;
    j["threshold"] = res.poly.threshold;
    json exc = json::array();
    for (const auto& c : res.poly.exceptional) exc.push_back(c.to_string());
    j["exceptional_values"] = exc;
    Series s = res.gf.to_series(order);
    json counts = json::array();
    for (int n = 1; n <= order; ++n) counts.push_back(s.coeff(n).to_string());
    j["counts"] = counts;
    return j;
}

void print_polyclass(const PolyclassResult& res, int order, const Output& out) {
    Series s = res.gf.to_series(order);
    std::ostringstream text;
    text << "classes: " << res.partition.size() << "\n";
    text << "gf: " << res.gf.to_string() << "\n";
    text << "polynomial: " << res.poly.polynomial_string()
         << "  (valid for n >= " << res.poly.threshold << ")\n";
    text << "counts:";
    for (int n = 1; n <= order; ++n) text << " " << s.coeff(n).to_string();
    text << "\n";
    std::vector<std::pair<long long, std::string>> table;
    for (int n = 1; n <= order; ++n) table.emplace_back(n, s.coeff(n).to_string());
    out.write(text.str(), polyclass_to_json(res, order), table);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permpat: exact permutation-pattern toolkit"};
    app.require_subcommand(1);
    int workers = default_workers();
    app.add_option("--workers", workers, "Worker threads (env PERMPAT_WORKERS)");

    // ---- avoid ----
    auto* avoid = app.add_subcommand("avoid", "Count basis-avoiding permutations");
    std::string avoid_basis;
    int avoid_n = 8;
    int avoid_max_n = -1;
    bool avoid_inv = false;
    Output avoid_out;
    avoid->add_option("--basis", avoid_basis, "Comma-separated patterns, e.g. \"1342\" or \"123;231\"")
        ->required();
    avoid->add_option("--n", avoid_n, "Length (counts lengths 1..n)")->required();
    avoid->add_option("--max-n", avoid_max_n, "Budget override");
    avoid->add_flag("--involutions", avoid_inv, "Count involutions only");
    add_output_flags(avoid, avoid_out);

    // ---- occur ----
    auto* occur = app.add_subcommand("occur", "Total pattern occurrences across a class");
    std::string occur_pattern, occur_basis;
    int occur_n = 7;
    Output occur_out;
    occur->add_option("--pattern", occur_pattern, "Pattern, e.g. 231")->required();
    occur->add_option("--basis", occur_basis, "Avoided basis, e.g. 123")->required();
    occur->add_option("--n", occur_n, "Length (totals for 1..n)")->required();
    add_output_flags(occur, occur_out);

    // ---- series ----
    auto* series_cmd = app.add_subcommand("series", "Print a catalog series");
    std::string series_name;
    int series_order = 12;
    bool series_list = false;
    Output series_out;
    series_cmd->add_option("name", series_name, "Catalog entry");
    series_cmd->add_option("--order", series_order, "Truncation order");
    series_cmd->add_flag("--list", series_list, "List catalog names");
    add_output_flags(series_cmd, series_out);

    // ---- polyclass ----
    auto* poly = app.add_subcommand("polyclass", "Enumerate a polynomial class from a peg-set file");
    std::string poly_file;
    int poly_order = 10;
    Output poly_out;
    poly->add_option("pegfile", poly_file, "File with one peg permutation per line")->required();
    poly->add_option("--order", poly_order, "Counts printed for n = 1..order");
    add_output_flags(poly, poly_out);

    // ---- ball ----
    auto* ball = app.add_subcommand("ball", "Radius-k ball of a block operation");
    std::string ball_op = "block_reversal";
    int ball_k = 1;
    int ball_oracle_n = 0;
    int ball_order = 10;
    Output ball_out;
    ball->add_option("--op", ball_op, "Operation name")->required();
    ball->add_option("--k", ball_k, "Radius")->required();
    ball->add_option("--oracle-n", ball_oracle_n, "Also BFS-check lengths 1..n");
    ball->add_option("--order", ball_order, "Counts printed for n = 1..order");
    add_output_flags(ball, ball_out);

    // ---- biject ----
    auto* biject = app.add_subcommand("biject", "Apply a Dyck-path bijection");
    std::string biject_map, biject_arg;
    biject->add_option("map", biject_map, "phi | phi_inverse | phi_prime | phi_star")->required();
    biject->add_option("input", biject_arg, "Permutation (or path for phi_inverse)")->required();

    // ---- stats ----
    auto* stats_cmd = app.add_subcommand("stats", "Statistics of one permutation");
    std::string stats_perm;
    Output stats_out;
    stats_cmd->add_option("perm", stats_perm, "One-line permutation, e.g. \"2 5 1 4 3\"")->required();
    add_output_flags(stats_cmd, stats_out);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites, "Criteria to run (c1..c12, all, paper-tables)");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit with 2
    }

    try {
        if (avoid->parsed()) {
            std::vector<Permutation> basis;
            std::string token;
            std::string cleaned = avoid_basis;
            std::replace(cleaned.begin(), cleaned.end(), ';', '\n');
            std::istringstream in(cleaned);
            while (std::getline(in, token)) {
                if (token.empty()) continue;
                if (token.find(' ') == std::string::npos && token.find(',') == std::string::npos) {
                    std::vector<int> digits;
                    for (char c : token) digits.push_back(c - '0');
                    basis.push_back(Permutation(digits));
                } else {
                    basis.push_back(Permutation::parse(token));
                }
            }
            OracleConfig cfg;
            cfg.workers = workers;
            if (avoid_max_n > 0) cfg.max_n_plain = avoid_max_n;
            std::ostringstream text;
            std::vector<std::pair<long long, std::string>> table;
            json counts = json::array();
            for (int n = 1; n <= avoid_n; ++n) {
                long long c = avoid_inv ? enumerate_involutions({basis, true, n}, cfg)
                                        : enumerate_class({basis, false, n}, cfg);
                text << n << " " << c << "\n";
                table.emplace_back(n, std::to_string(c));
                counts.push_back(c);
            }
            avoid_out.write(text.str(), json{{"basis", avoid_basis}, {"counts", counts}}, table);
        } else if (occur->parsed()) {
            Permutation sigma = occur_pattern.find(' ') == std::string::npos
                ? [&] { std::vector<int> d; for (char c : occur_pattern) d.push_back(c - '0');
                        return Permutation(d); }()
                : Permutation::parse(occur_pattern);
            Permutation beta = occur_basis.find(' ') == std::string::npos
                ? [&] { std::vector<int> d; for (char c : occur_basis) d.push_back(c - '0');
                        return Permutation(d); }()
                : Permutation::parse(occur_basis);
            OracleConfig cfg;
            cfg.workers = workers;
            std::ostringstream text;
            std::vector<std::pair<long long, std::string>> table;
            json counts = json::array();
            for (int n = 1; n <= occur_n; ++n) {
                long long t = occurrence_totals(sigma, {beta}, n, cfg);
                text << n << " " << t << "\n";
                table.emplace_back(n, std::to_string(t));
                counts.push_back(t);
            }
            occur_out.write(text.str(),
                            json{{"pattern", occur_pattern}, {"basis", occur_basis},
                                 {"totals", counts}},
                            table);
        } else if (series_cmd->parsed()) {
            if (series_list || series_name.empty()) {
                for (const auto& n : catalog_names()) std::cout << n << "\n";
                std::cout << "s0\ns1\ns2\n";
                return 0;
            }
            if (series_name == "s0" || series_name == "s1" || series_name == "s2") {
                Bivar b = catalog_bivar(series_name, series_order);
                std::cout << b.to_string() << "\n";
                return 0;
            }
            Series s = catalog(series_name, series_order);
            std::ostringstream text;
            std::vector<std::pair<long long, std::string>> table;
            json coeffs = json::array();
            for (int n = 0; n <= series_order; ++n) {
                text << n << " " << s.coeff(n).to_string() << "\n";
                table.emplace_back(n, s.coeff(n).to_string());
                coeffs.push_back(s.coeff(n).to_string());
            }
            series_out.write(text.str(), json{{"name", series_name}, {"coefficients", coeffs}},
                             table);
        } else if (poly->parsed()) {
            std::ifstream in(poly_file);
            if (!in) throw std::runtime_error("cannot open peg file " + poly_file);
            std::stringstream buf;
            buf << in.rdbuf();
            std::vector<PegPerm> pegs = parse_peg_file(buf.str());
            std::set<PegPerm> s(pegs.begin(), pegs.end());
            print_polyclass(polyclass_enumerate(s), poly_order, poly_out);
        } else if (ball->parsed()) {
            BlockOp op = block_op_from_string(ball_op);
            PolyclassResult res = ball_polynomial(op, ball_k);
            print_polyclass(res, ball_order, ball_out);
            if (ball_oracle_n > 0) {
                Series s = res.gf.to_series(std::max(ball_order, ball_oracle_n));
                bool all_ok = true;
                for (int n = 1; n <= ball_oracle_n; ++n) {
                    long long bfs = bfs_ball(op, ball_k, n);
                    long long gf = s.coeff(n).num().to_int64();
                    bool ok = bfs == gf;
                    all_ok = all_ok && ok;
                    std::cout << "oracle n=" << n << ": bfs=" << bfs << " gf=" << gf
                              << (ok ? " ok" : " MISMATCH") << "\n";
                }
                if (!all_ok) return 1;
            }
        } else if (biject->parsed()) {
            if (biject_map == "phi_inverse") {
                std::cout << phi_inverse(DyckPath::parse(biject_arg)).to_string() << "\n";
            } else {
                Permutation p = Permutation::parse(biject_arg);
                if (biject_map == "phi") std::cout << phi(p).to_string() << "\n";
                else if (biject_map == "phi_prime") std::cout << phi_prime(p).to_string() << "\n";
                else if (biject_map == "phi_star") std::cout << phi_star(p).to_string() << "\n";
                else throw std::invalid_argument("unknown map " + biject_map);
            }
        } else if (stats_cmd->parsed()) {
            Permutation p = Permutation::parse(stats_perm);
            StatRecord r = stats(p);
            json j{{"ascents", r.ascents},
                   {"inversions", r.inversions},
                   {"ltr_minima", r.ltr_minima_count},
                   {"rtl_maxima", r.rtl_maxima_count},
                   {"fixed_points", r.fixed_points},
                   {"bonds", r.bonds},
                   {"ltr_minima_positions", r.ltr_minima_positions},
                   {"is_involution", is_involution(p)},
                   {"is_simple", is_simple(p)}};
            if (p.size() >= 2) {
                GapReport g = gap_report(p);
                j["min_gap"] = g.min_gap;
            }
            std::ostringstream text;
            text << j.dump(2) << "\n";
            stats_out.write(text.str(), j, {});
        } else if (verify->parsed()) {
            auto results = run_acceptance(suites, workers);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
                          << r.detail << ", " << r.seconds << "s)\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
