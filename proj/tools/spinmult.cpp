// spinmult: exact weight multiplicities of the spin module of a
// block-diagonal subalgebra of sl(n).
//
// Subcommands:
//   mult levi      --composition 1,1,2 --weight 3/2,1/2,-1,-1
//   mult cartan    --n 5 --partition 2^5 [--method inductive|tableaux|oracle]
//   mult maxparab  --p 3 --q 3 --alpha 3,2,1 --beta 2,2,2
//                  [--list-tableaux|--list-matrices]
//   table cartan   --n 5
//   enumerate      --composition 1,2,2
//   tableaux       --n 5 --partition 2^5
//   verify         [--levi N] [--cartan N] [--maxparab S]
//
// Global: --json emits a single JSON document instead of TSV/bare output.
// Env:    SPINMULT_ORACLE_MAX overrides the exhaustive-enumeration guard.
//
// Exit codes: 0 success; 1 a verify cross-check failed (first
// counterexample printed); 2 validation error (message on stderr).

#include "CLI11.hpp"
#include "json.hpp"

#include "spinmult/cartan.hpp"
#include "spinmult/common.hpp"
#include "spinmult/levi.hpp"
#include "spinmult/oracle.hpp"
#include "spinmult/rootsys.hpp"
#include "spinmult/twoblock.hpp"
#include "spinmult/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

using J = nlohmann::ordered_json;
using spinmult::Count;

// Counts that fit in 64 bits stay JSON numbers; larger ones become decimal
// strings so no consumer ever sees a rounded value.
J json_count(const Count& c) {
    static const Count max64 = Count(std::numeric_limits<long long>::max());
    if (c <= max64) return J(static_cast<long long>(c));
    return J(c.str());
}

int oracle_guard_from_env() {
    const char* raw = std::getenv("SPINMULT_ORACLE_MAX");
    if (raw == nullptr) return spinmult::kDefaultOracleBound;
    const std::string s(raw);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1)
        throw std::invalid_argument("SPINMULT_ORACLE_MAX must be a positive integer, got \"" +
                                    s + "\"");
    return value;
}

// Composition(...) sorts its parts into canonical order; accepting "3,1"
// here would silently reinterpret the accompanying weight's block layout,
// so the command line insists on the canonical spelling.
spinmult::Composition parse_composition_strict(const std::string& s) {
    const spinmult::Composition c = spinmult::parse_composition(s);
    std::vector<int> given;
    for (std::string_view tok : spinmult::detail::split_commas(s))
        given.push_back(static_cast<int>(spinmult::detail::parse_int(tok, "composition part")));
    if (given != c.parts())
        throw std::invalid_argument("composition parts must be in nondecreasing order; got \"" +
                                    s + "\", expected \"" + format_composition(c) + "\"");
    return c;
}

std::string rows_to_line(const std::vector<std::vector<int>>& rows) {
    std::string line;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) line += ';';
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i > 0) line += ',';
            line += std::to_string(rows[r][i]);
        }
    }
    return line;
}

J rows_to_json(const std::vector<std::vector<int>>& rows) {
    J out = J::array();
    for (const auto& r : rows) out.push_back(J(r));
    return out;
}

void emit(const J& doc) { std::cout << doc.dump(2) << '\n'; }

// --- mult levi ------------------------------------------------------------

void run_mult_levi(const std::string& comp_text, const std::string& weight_text, bool json) {
    const spinmult::Composition comp = parse_composition_strict(comp_text);
    const spinmult::Weight w = spinmult::parse_weight(weight_text);
    if (w.n() != comp.n())
        throw std::invalid_argument("weight has " + std::to_string(w.n()) +
                                    " coordinates but the composition sums to " +
                                    std::to_string(comp.n()));
    const Count m = spinmult::mult_levi(comp, w);
    if (json) {
        J doc;
        doc["composition"] = format_composition(comp);
        doc["weight"] = format_weight(w);
        doc["multiplicity"] = json_count(m);
        emit(doc);
    } else {
        std::cout << m.str() << '\n';
    }
}

// --- mult cartan ----------------------------------------------------------

void run_mult_cartan(int n, const std::string& partition_text, const std::string& method,
                     bool json, int guard) {
    const spinmult::SpinPartition lp(spinmult::parse_partition(partition_text), n);
    Count m;
    if (method == "inductive") {
        m = spinmult::n_lambda_inductive(lp);
    } else if (method == "tableaux") {
        m = spinmult::n_lambda_tableaux(lp);
    } else {
        const spinmult::LeviContext ctx = spinmult::build_context(
            spinmult::Composition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        m = spinmult::brute_multiplicity(ctx, mu_of_partition(lp), guard);
    }
    if (json) {
        J doc;
        doc["n"] = n;
        doc["partition"] = format_partition(lp.lambda);
        doc["method"] = method;
        doc["multiplicity"] = json_count(m);
        emit(doc);
    } else {
        std::cout << m.str() << '\n';
    }
}

// --- mult maxparab ----------------------------------------------------------

void run_mult_maxparab(int p, int q, const std::string& alpha_text,
                       const std::string& beta_text, bool list_tableaux, bool list_matrices,
                       bool json) {
    const spinmult::MarginPair mp(p, q, spinmult::parse_partition(alpha_text),
                                  spinmult::parse_partition(beta_text));
    const Count m = spinmult::count_margin_matrices(mp);

    std::vector<spinmult::RowTableau> tableaux;
    if (list_tableaux || list_matrices) tableaux = spinmult::row_tableaux(mp);

    if (json) {
        J doc;
        doc["p"] = p;
        doc["q"] = q;
        doc["alpha"] = format_partition(mp.alpha);
        doc["beta"] = format_partition(mp.beta);
        doc["multiplicity"] = json_count(m);
        if (list_tableaux) {
            J arr = J::array();
            for (const auto& t : tableaux) arr.push_back(rows_to_json(t.rows));
            doc["tableaux"] = std::move(arr);
        }
        if (list_matrices) {
            J arr = J::array();
            for (const auto& t : tableaux) {
                const spinmult::BinMatrix a = spinmult::tableau_to_matrix(t, p, q);
                J rows = J::array();
                for (const auto& row : a.entries) {
                    std::string line;
                    for (int e : row) line += static_cast<char>('0' + e);
                    rows.push_back(line);
                }
                arr.push_back(std::move(rows));
            }
            doc["matrices"] = std::move(arr);
        }
        emit(doc);
    } else if (list_tableaux) {
        for (const auto& t : tableaux) std::cout << rows_to_line(t.rows) << '\n';
    } else if (list_matrices) {
        for (std::size_t i = 0; i < tableaux.size(); ++i) {
            if (i > 0) std::cout << '\n';
            const spinmult::BinMatrix a = spinmult::tableau_to_matrix(tableaux[i], p, q);
            for (const auto& row : a.entries) {
                std::string line;
                for (int e : row) line += static_cast<char>('0' + e);
                std::cout << line << '\n';
            }
        }
    } else {
        std::cout << m.str() << '\n';
    }
}

// --- table cartan -----------------------------------------------------------

void run_table_cartan(int n, bool json, int guard) {
    const long long boxes = static_cast<long long>(n) * (n - 1) / 2;
    const bool with_oracle = boxes <= guard;
    spinmult::WeightCounts counts;
    if (with_oracle) {
        const spinmult::LeviContext ctx = spinmult::build_context(
            spinmult::Composition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        counts = spinmult::enumerate_weight_counts(ctx, guard);
    }

    J rows = J::array();
    for (const spinmult::Partition& lam : spinmult::support_partitions(n)) {
        const spinmult::SpinPartition lp(lam, n);
        const Count inductive = spinmult::n_lambda_inductive(lp);
        const Count tableaux = spinmult::n_lambda_tableaux(lp);
        Count oracle = 0;
        if (with_oracle) {
            const auto it = counts.find(mu_of_partition(lp).doubled());
            if (it != counts.end()) oracle = it->second;
        }
        if (json) {
            J row;
            row["partition"] = format_partition(lam);
            row["inductive"] = json_count(inductive);
            row["tableaux"] = json_count(tableaux);
            if (with_oracle) row["oracle"] = json_count(oracle);
            rows.push_back(std::move(row));
        } else {
            std::cout << format_partition(lam) << '\t' << inductive.str() << '\t'
                      << tableaux.str();
            if (with_oracle) std::cout << '\t' << oracle.str();
            std::cout << '\n';
        }
    }
    if (json) {
        J doc;
        doc["n"] = n;
        doc["rows"] = std::move(rows);
        emit(doc);
    }
}

// --- enumerate ----------------------------------------------------------------

void run_enumerate(const std::string& comp_text, bool json, int guard) {
    const spinmult::Composition comp = parse_composition_strict(comp_text);
    const spinmult::LeviContext ctx = spinmult::build_context(comp);
    const spinmult::WeightCounts raw = spinmult::enumerate_weight_counts(ctx, guard);

    // One record per weight orbit under the block symmetries: fold every raw
    // weight onto its normalized representative (all members share a count).
    std::map<std::vector<int>, Count> folded;
    for (const auto& [d, cnt] : raw)
        folded[normalize_weight(ctx, spinmult::Weight(std::vector<int>(d))).doubled()] = cnt;

    J weights = J::array();
    for (auto it = folded.rbegin(); it != folded.rend(); ++it) {
        const spinmult::Weight w{std::vector<int>(it->first)};
        if (json) {
            J rec;
            rec["weight"] = format_weight(w);
            rec["multiplicity"] = json_count(it->second);
            weights.push_back(std::move(rec));
        } else {
            std::cout << format_weight(w) << '\t' << it->second.str() << '\n';
        }
    }
    if (json) {
        J doc;
        doc["composition"] = format_composition(comp);
        doc["weights"] = std::move(weights);
        emit(doc);
    }
}

// --- tableaux -------------------------------------------------------------------

void run_tableaux(int n, const std::string& partition_text, bool json) {
    const spinmult::SpinPartition lp(spinmult::parse_partition(partition_text), n);
    std::vector<spinmult::SpinTableau> all = spinmult::spin_tableaux(lp);
    std::sort(all.begin(), all.end());

    Count total = 0;
    J arr = J::array();
    for (const auto& t : all) {
        const Count c = spinmult::n_tau(t);
        total += c;
        if (json) {
            J rec;
            rec["rows"] = rows_to_json(t.rows);
            rec["count"] = json_count(c);
            arr.push_back(std::move(rec));
        } else {
            std::cout << rows_to_line(t.rows) << '\t' << c.str() << '\n';
        }
    }
    if (json) {
        J doc;
        doc["n"] = n;
        doc["partition"] = format_partition(lp.lambda);
        doc["tableaux"] = std::move(arr);
        doc["total"] = json_count(total);
        emit(doc);
    }
}

// --- verify ---------------------------------------------------------------------

int run_verify(int levi_n, int cartan_n, int maxparab_s, bool json, int guard) {
    if (levi_n == 0 && cartan_n == 0 && maxparab_s == 0)
        throw std::invalid_argument(
            "verify needs at least one scope: --levi N, --cartan N, or --maxparab S");

    std::vector<spinmult::CheckResult> checks;
    const auto append = [&checks](std::vector<spinmult::CheckResult> part) {
        for (auto& c : part) checks.push_back(std::move(c));
    };
    if (levi_n > 0) append(spinmult::verify_levi(levi_n, guard));
    if (cartan_n > 0) append(spinmult::verify_cartan(cartan_n, guard));
    if (maxparab_s > 0) append(spinmult::verify_maxparab(maxparab_s, guard));

    bool all_passed = true;
    J arr = J::array();
    for (const auto& c : checks) {
        all_passed = all_passed && c.passed;
        if (json) {
            J rec;
            rec["name"] = c.name;
            rec["cases"] = c.cases;
            rec["passed"] = c.passed;
            if (!c.passed) rec["detail"] = c.detail;
            arr.push_back(std::move(rec));
        } else {
            std::cout << c.name << '\t' << c.cases << '\t' << (c.passed ? "ok" : "FAIL");
            if (!c.passed) std::cout << '\t' << c.detail;
            std::cout << '\n';
        }
    }
    if (json) {
        J doc;
        doc["checks"] = std::move(arr);
        doc["passed"] = all_passed;
        emit(doc);
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    try {
        const int guard = oracle_guard_from_env();

        CLI::App app{"Exact weight multiplicities of the spin module attached to a "
                     "block-diagonal subalgebra of sl(n)"};
        app.require_subcommand(1);
        bool json = false;
        app.add_flag("--json", json, "emit a single JSON document");

        int exit_code = 0;

        // mult
        CLI::App* mult = app.add_subcommand("mult", "multiplicity of a single weight");
        mult->require_subcommand(1);
        mult->fallthrough();

        std::string levi_comp, levi_weight;
        CLI::App* mlevi = mult->add_subcommand("levi", "general block sizes");
        mlevi->fallthrough();
        mlevi->add_option("--composition", levi_comp, "block sizes, nondecreasing, e.g. 1,1,2")
            ->required();
        mlevi->add_option("--weight", levi_weight, "weight coordinates, e.g. 3/2,1/2,-1,-1")
            ->required();
        mlevi->callback([&] { run_mult_levi(levi_comp, levi_weight, json); });

        int mc_n = 0;
        std::string mc_partition, mc_method = "inductive";
        CLI::App* mcartan = mult->add_subcommand("cartan", "all blocks of size one");
        mcartan->fallthrough();
        mcartan->add_option("--n", mc_n, "rank parameter n")->required()->check(CLI::PositiveNumber);
        mcartan->add_option("--partition", mc_partition, "partition of n(n-1)/2, e.g. 2^5")
            ->required();
        mcartan->add_option("--method", mc_method, "counting method")
            ->check(CLI::IsMember({"inductive", "tableaux", "oracle"}));
        mcartan->callback([&] { run_mult_cartan(mc_n, mc_partition, mc_method, json, guard); });

        int mm_p = 0, mm_q = 0;
        std::string mm_alpha, mm_beta;
        bool mm_tabs = false, mm_mats = false;
        CLI::App* mmax = mult->add_subcommand("maxparab", "two blocks of sizes p and q");
        mmax->fallthrough();
        mmax->add_option("--p", mm_p, "first block size")->required()->check(CLI::PositiveNumber);
        mmax->add_option("--q", mm_q, "second block size")->required()->check(CLI::PositiveNumber);
        mmax->add_option("--alpha", mm_alpha, "row-sum partition, e.g. 3,2,1")->required();
        mmax->add_option("--beta", mm_beta, "column-sum partition, e.g. 2,2,2")->required();
        CLI::Option* olt =
            mmax->add_flag("--list-tableaux", mm_tabs, "print every row tableau, one per line");
        mmax->add_flag("--list-matrices", mm_mats,
                       "print every 0/1 matrix, rows as 0/1 strings, blank line between")
            ->excludes(olt);
        mmax->callback(
            [&] { run_mult_maxparab(mm_p, mm_q, mm_alpha, mm_beta, mm_tabs, mm_mats, json); });

        // table
        CLI::App* table = app.add_subcommand("table", "full multiplicity tables");
        table->require_subcommand(1);
        table->fallthrough();
        int tc_n = 0;
        CLI::App* tcartan =
            table->add_subcommand("cartan", "all dominant spin weights of sl(n) with counts");
        tcartan->fallthrough();
        tcartan->add_option("--n", tc_n, "rank parameter n")->required()->check(CLI::PositiveNumber);
        tcartan->callback([&] { run_table_cartan(tc_n, json, guard); });

        // enumerate
        std::string en_comp;
        CLI::App* enumerate =
            app.add_subcommand("enumerate", "all weights with counts, by exhaustive enumeration");
        enumerate->fallthrough();
        enumerate->add_option("--composition", en_comp, "block sizes, nondecreasing")->required();
        enumerate->callback([&] { run_enumerate(en_comp, json, guard); });

        // tableaux
        int tx_n = 0;
        std::string tx_partition;
        CLI::App* tableaux =
            app.add_subcommand("tableaux", "spin tableaux of a partition with their counts");
        tableaux->fallthrough();
        tableaux->add_option("--n", tx_n, "rank parameter n")->required()->check(CLI::PositiveNumber);
        tableaux->add_option("--partition", tx_partition, "partition of n(n-1)/2")->required();
        tableaux->callback([&] { run_tableaux(tx_n, tx_partition, json); });

        // verify
        int vf_levi = 0, vf_cartan = 0, vf_maxparab = 0;
        CLI::App* verify = app.add_subcommand("verify", "cross-check every method against the oracle");
        verify->fallthrough();
        verify->add_option("--levi", vf_levi, "all canonical compositions of 2..N")
            ->check(CLI::PositiveNumber);
        verify->add_option("--cartan", vf_cartan, "all partitions for 2..N")
            ->check(CLI::PositiveNumber);
        verify->add_option("--maxparab", vf_maxparab, "all margin pairs with p+q <= S")
            ->check(CLI::PositiveNumber);
        verify->callback(
            [&] { exit_code = run_verify(vf_levi, vf_cartan, vf_maxparab, json, guard); });

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }
        return exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
