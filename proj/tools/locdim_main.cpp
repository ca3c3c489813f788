#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "locdim/constructions.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/io.hpp"
#include "locdim/isomorphism.hpp"
#include "locdim/solvers.hpp"

namespace {

using namespace locdim;

std::vector<int> parse_csv_ids(const std::string& s) {
    if (s.empty()) return {};
    std::vector<int> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParamError("bad list entry '" + tok + "'");
        }
    }
    if (out.empty()) throw ParamError("empty id list");
    return out;
}

Generated gen_family(const std::string& family, const std::vector<int>& a) {
    auto need = [&](size_t k) {
        if (a.size() != k)
            throw ParamError("family '" + family + "' takes " + std::to_string(k) +
                             " parameter(s)");
    };
    if (family == "chain") {
        need(1);
        return chain(a[0]);
    }
    if (family == "antichain") {
        need(1);
        return antichain(a[0]);
    }
    if (family == "standard") {
        need(1);
        return standard_example(a[0]);
    }
    if (family == "boolean") {
        need(1);
        return boolean_lattice(a[0]);
    }
    if (family == "layers") {
        need(3);
        return layers(a[0], a[1], a[2]);
    }
    throw ParamError("unknown family '" + family + "'");
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << "\n";
}

std::string fmt_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v;
    return ss.str();
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                 bool tsv) {
    if (rows.empty()) return;
    if (tsv) {
        for (const auto& r : rows) {
            for (size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
            out << "\n";
        }
        return;
    }
    std::vector<size_t> width(rows[0].size(), 0);
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) out << "  ";
            if (i + 1 == r.size())
                out << r[i]; // no trailing padding
            else
                out << std::left << std::setw(static_cast<int>(width[i])) << r[i];
        }
        out << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset dimension and graph cover toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    std::string input, output, poset_out, host_out;
    std::string host_path, witness_path;
    long long budget_nodes = 0, budget_ms = 0;
    bool emit_cert = false, tsv = false;
    std::uint64_t seed = 1;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget_nodes, "search node limit (0 = none)");
        cmd->add_option("--budget-ms", budget_ms, "wall clock limit in ms (0 = none)");
    };
    auto make_budget = [&](int max_elements) {
        SolveBudget b;
        b.max_elements = max_elements;
        b.max_nodes = budget_nodes;
        b.max_ms = budget_ms;
        return b;
    };

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "write a generated poset");
    std::string family;
    std::vector<int> params;
    gen->add_option("family", family, "chain|antichain|standard|boolean|layers")->required();
    gen->add_option("params", params, "family parameters (layers takes s t n)");
    gen->add_option("--output", output, "write here instead of stdout");
    gen->callback([&] {
        Generated g = gen_family(family, params);
        if (output.empty())
            write_poset(std::cout, g.poset);
        else
            write_poset_file(output, g.poset);
    });

    // ---- dim / ldim ---------------------------------------------------
    for (bool local : {false, true}) {
        const char* name = local ? "ldim" : "dim";
        const char* what = local ? "exact local dimension of a poset file"
                                 : "exact dimension of a poset file";
        auto* cmd = app.add_subcommand(name, what);
        cmd->add_option("poset", input, "poset file")->required();
        auto* out_opt = cmd->add_option("--output", output, "witness file");
        cmd->add_flag("--emit-certificate", emit_cert, "write the optimal witness")
            ->needs(out_opt);
        add_budget(cmd);
        cmd->callback([&, local] {
            Poset p = read_poset_file(input);
            SolveBudget b = make_budget(p.size());
            if (local) {
                LdimResult res = exact_ldim(p, b);
                std::cout << res.value << "\n";
                if (emit_cert) write_realizer_file(output, res.witness);
            } else {
                DimResult res = exact_dim(p, b);
                std::cout << res.value << "\n";
                if (emit_cert) write_realizer_file(output, LocalRealizer{res.witness});
            }
        });
    }

    // ---- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a certificate against its host");
    verify->require_subcommand(1);

    auto* v_realizer = verify->add_subcommand("realizer", "realizer of a poset");
    v_realizer->add_option("poset", host_path, "poset file")->required();
    v_realizer->add_option("witness", witness_path, "realizer file")->required();
    v_realizer->callback([&] {
        Poset p = read_poset_file(host_path);
        LocalRealizer r = read_realizer_file(witness_path);
        try {
            VerifyResult res = verify_realizer(p, r.ples);
            if (res.ok) {
                std::cout << "verified realizer: " << r.ples.size() << " extensions\n";
            } else {
                std::cout << "violation: " << res.violation->describe() << "\n";
                rc = 1;
            }
        } catch (const IdRangeError& e) {
            std::cout << "violation: " << e.what() << "\n";
            rc = 1;
        }
    });

    auto* v_local = verify->add_subcommand("local", "local realizer of a poset");
    v_local->add_option("poset", host_path, "poset file")->required();
    v_local->add_option("witness", witness_path, "realizer file")->required();
    v_local->callback([&] {
        Poset p = read_poset_file(host_path);
        LocalRealizer r = read_realizer_file(witness_path);
        try {
            VerifyResult res = verify_local_realizer(p, r);
            if (res.ok) {
                std::cout << "verified local realizer: mu " << res.stats.mu << "\n";
            } else {
                std::cout << "violation: " << res.violation->describe() << "\n";
                rc = 1;
            }
        } catch (const IdRangeError& e) {
            std::cout << "violation: " << e.what() << "\n";
            rc = 1;
        }
    });

    auto* v_cover = verify->add_subcommand("cover", "edge cover of a bipartite graph");
    v_cover->add_option("bigraph", host_path, "bipartite graph file")->required();
    v_cover->add_option("witness", witness_path, "cover file")->required();
    v_cover->callback([&] {
        BipartiteGraph g = read_bigraph_file(host_path);
        CoverFamily c = read_cover_file(witness_path);
        bool has_diff = std::any_of(c.members.begin(), c.members.end(), [](const CoverMember& m) {
            return m.shape == MemberShape::Diff;
        });
        CoverKind kind = has_diff ? CoverKind::Difference : CoverKind::Biclique;
        CoverCheck res = verify_cover(g, c, kind);
        if (res.ok) {
            std::cout << "verified cover (" << (has_diff ? "difference" : "biclique")
                      << "): max multiplicity " << res.max_mult << ", total vertices "
                      << res.total_vertices << "\n";
        } else {
            std::cout << "violation: " << res.violation->describe() << "\n";
            rc = 1;
        }
    });

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "run a witness-producing construction");
    construct->require_subcommand(1);

    auto* c_h2 = construct->add_subcommand("height2", "local realizer of a height <= 2 poset");
    c_h2->add_option("--input", input, "poset file")->required();
    c_h2->add_option("--output", output, "realizer file (default: stdout)");
    c_h2->callback([&] {
        Poset p = read_poset_file(input);
        LocalRealizer r = height2_local_realizer(p);
        if (output.empty()) {
            write_realizer(std::cout, r);
        } else {
            write_realizer_file(output, r);
            std::cout << "mu " << mu_stats(r, p.size()).mu << "\n";
        }
    });

    auto* c_split = construct->add_subcommand(
        "split-bound", "sandwich local-dimension bounds through the split poset");
    c_split->add_option("--input", input, "poset file")->required();
    auto* split_out =
        c_split->add_option("--output", output, "realizer file for the split witness");
    c_split->add_flag("--emit-certificate", emit_cert, "write the split realizer")
        ->needs(split_out);
    add_budget(c_split);
    c_split->callback([&] {
        Poset p = read_poset_file(input);
        SolveBudget b = make_budget(2 * p.size());
        if (b.max_nodes == 0) b.max_nodes = 10'000'000; // keep the exact attempt bounded
        SplitBoundReport rep = ldim_bound_via_split(p, b);
        std::ostream& out = std::cout;
        kv(out, "split_size", std::to_string(rep.split.poset.size()));
        kv(out, "mu_q", std::to_string(rep.mu_q));
        kv(out, "upper", std::to_string(rep.upper));
        kv(out, "lower", std::to_string(rep.lower));
        kv(out, "lower_exact", rep.lower_exact ? "yes" : "no");
        if (rep.lower_exact) kv(out, "ldim_q", std::to_string(rep.ldim_q));
        if (emit_cert) write_realizer_file(output, rep.q_realizer);
    });

    auto* c_prod = construct->add_subcommand(
        "product", "local realizer of a product from factor realizers");
    std::string p1_path, p2_path, r1_path, r2_path;
    c_prod->add_option("poset1", p1_path, "first factor poset")->required();
    c_prod->add_option("poset2", p2_path, "second factor poset")->required();
    c_prod->add_option("realizer1", r1_path, "local realizer of the first factor")->required();
    c_prod->add_option("realizer2", r2_path, "local realizer of the second factor")->required();
    c_prod->add_option("--output", output, "realizer file (default: stdout)");
    c_prod->add_option("--poset-out", poset_out, "also write the product poset here");
    c_prod->callback([&] {
        Poset a = read_poset_file(p1_path);
        Poset b = read_poset_file(p2_path);
        LocalRealizer ra = read_realizer_file(r1_path);
        LocalRealizer rb = read_realizer_file(r2_path);
        Generated prod = product(a, b);
        LocalRealizer r =
            product_realizer(a, b, ra, rb, a.topological_order(), b.topological_order());
        if (!poset_out.empty()) write_poset_file(poset_out, prod.poset);
        if (output.empty()) {
            write_realizer(std::cout, r);
        } else {
            write_realizer_file(output, r);
            std::cout << "mu " << mu_stats(r, prod.poset.size()).mu << "\n";
        }
    });

    auto* c_bogart = construct->add_subcommand(
        "bogart", "linear extension placing one chain low and another high");
    std::string below_csv, above_csv;
    c_bogart->add_option("--input", input, "poset file")->required();
    c_bogart->add_option("--below", below_csv, "chain kept below its incomparables (csv ids)");
    c_bogart->add_option("--above", above_csv, "chain kept above its incomparables (csv ids)");
    c_bogart->add_option("--output", output, "realizer file (default: stdout)");
    c_bogart->callback([&] {
        Poset p = read_poset_file(input);
        std::vector<int> ext =
            bogart_extension(p, parse_csv_ids(below_csv), parse_csv_ids(above_csv));
        LocalRealizer r;
        r.ples.push_back(Ple{std::move(ext)});
        if (output.empty())
            write_realizer(std::cout, r);
        else
            write_realizer_file(output, r);
    });

    auto* c_young = construct->add_subcommand(
        "young", "biclique cover of the difference graph of a partition");
    std::string partition_csv;
    c_young->add_option("partition", partition_csv, "non-increasing parts, e.g. 9,4,2")
        ->required();
    c_young->add_option("--output", output, "cover file (default: stdout)");
    c_young->add_option("--host-out", host_out, "also write the host bipartite graph");
    c_young->callback([&] {
        DifferenceGraph h = from_partition(parse_csv_ids(partition_csv));
        CoverFamily c = young_cover(h);
        if (!host_out.empty()) write_bigraph_file(host_out, to_bipartite(h));
        if (output.empty()) {
            write_cover(std::cout, c);
        } else {
            write_cover_file(output, c);
            std::cout << "members " << c.members.size() << "\n";
        }
    });

    auto* c_stair = construct->add_subcommand(
        "staircase", "biclique cover of the staircase with 2^k - 1 rows");
    int stair_k = 0;
    c_stair->add_option("k", stair_k, "staircase exponent, k >= 2")->required();
    c_stair->add_option("--output", output, "cover file (default: stdout)");
    c_stair->add_option("--host-out", host_out, "also write the host bipartite graph");
    c_stair->callback([&] {
        CoverFamily c = staircase_cover(stair_k);
        if (!host_out.empty()) {
            int n = (1 << stair_k) - 1;
            std::vector<int> parts(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = n - i;
            write_bigraph_file(host_out, to_bipartite(from_partition(parts)));
        }
        if (output.empty()) {
            write_cover(std::cout, c);
        } else {
            write_cover_file(output, c);
            std::cout << "members " << c.members.size() << "\n";
        }
    });

    auto* c_removal = construct->add_subcommand(
        "removal", "remove elements and lift a realizer of the remainder");
    std::string removal_mode;
    c_removal->add_option("mode", removal_mode, "pair (height <= 2) or quad")
        ->required()
        ->check(CLI::IsMember({"pair", "quad"}));
    c_removal->add_option("--input", input, "poset file")->required();
    c_removal->add_option("--output", output, "realizer file for the lifted witness");
    add_budget(c_removal);
    c_removal->callback([&] {
        Poset p = read_poset_file(input);
        SolveBudget b = make_budget(std::min(p.size(), 10));
        if (removal_mode == "pair") {
            PairRemovalReport rep = removable_pair_height2(p, b);
            kv(std::cout, "x", std::to_string(rep.x));
            kv(std::cout, "y", std::to_string(rep.y));
            kv(std::cout, "mu", std::to_string(rep.removal.mu));
            kv(std::cout, "mu_reduced", std::to_string(rep.removal.mu_reduced));
            kv(std::cout, "certified", rep.certified ? "yes" : "no");
            if (rep.certified) {
                kv(std::cout, "ldim", std::to_string(rep.ldim_value));
                kv(std::cout, "ldim_reduced", std::to_string(rep.ldim_reduced));
            }
            if (!output.empty()) write_realizer_file(output, rep.removal.realizer);
        } else {
            QuadrupleReport rep = removable_quadruple(p, b);
            std::ostringstream ids;
            for (size_t i = 0; i < rep.removed.size(); ++i)
                ids << (i ? " " : "") << rep.removed[i];
            kv(std::cout, "removed", ids.str());
            kv(std::cout, "mu", std::to_string(rep.mu));
            kv(std::cout, "mu_reduced", std::to_string(rep.mu_reduced));
            if (!output.empty()) write_realizer_file(output, rep.realizer);
        }
    });

    // ---- bound --------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "arithmetic lower-bound reports");
    bound->require_subcommand(1);
    auto* b_bool = bound->add_subcommand("boolean", "two-layer counting bound");
    int bound_n = 0;
    b_bool->add_option("n", bound_n, "ground set size, n >= 8")->required();
    b_bool->callback([&] { std::cout << boolean_lb_report(bound_n).render(); });

    // ---- experiment ---------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "seeded randomized comparisons");
    experiment->require_subcommand(1);
    auto* e_rb = experiment->add_subcommand(
        "random-bipartite", "sample G(n1,n2,p); compare block-trace and exact covers");
    int rb_n1 = 0, rb_n2 = 0;
    double rb_p = 1.0 / std::numbers::e;
    e_rb->add_option("--n1", rb_n1, "rows")->required();
    e_rb->add_option("--n2", rb_n2, "columns")->required();
    e_rb->add_option("--p", rb_p, "edge probability (default 1/e)");
    e_rb->add_option("--seed", seed, "sampler seed");
    e_rb->add_flag("--tsv", tsv, "tab-separated output");
    add_budget(e_rb);
    e_rb->callback([&] {
        BipartiteGraph g = sample_bipartite(rb_n1, rb_n2, rb_p, seed);
        CoverFamily bt = block_trace_cover(g);
        CoverCheck chk = verify_cover(g, bt, CoverKind::Biclique);
        if (!chk.ok) throw Error("block-trace cover failed verification: " +
                                 chk.violation->describe());
        std::string exact_val = "-", exact_nodes = "-";
        try {
            CoverResult res = exact_cover_number(g, CoverObjective::BicliqueLocal,
                                                 make_budget(0));
            exact_val = std::to_string(res.value);
            exact_nodes = std::to_string(res.stats.nodes);
        } catch (const SizeError&) {
        } catch (const BudgetError&) {
        } catch (const NodeLimitError&) {
        }
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"n1", "n2", "p", "seed", "edges", "bt_members", "bt_mult",
                        "exact_lbc", "exact_nodes"});
        rows.push_back({std::to_string(rb_n1), std::to_string(rb_n2), fmt_double(rb_p),
                        std::to_string(seed), std::to_string(g.edges.size()),
                        std::to_string(bt.members.size()), std::to_string(chk.max_mult),
                        exact_val, exact_nodes});
        print_table(std::cout, rows, tsv);
    });

    // ---- survey -------------------------------------------------------
    auto* survey = app.add_subcommand("survey", "exhaustive small-poset tabulations");
    survey->require_subcommand(1);
    auto* s_posets = survey->add_subcommand(
        "posets", "dim against local dim over all isomorphism classes");
    int max_n = 5;
    s_posets->add_option("--max-n", max_n, "largest element count")->check(CLI::Range(1, 6));
    s_posets->add_flag("--tsv", tsv, "tab-separated output");
    add_budget(s_posets);
    s_posets->callback([&] {
        std::map<std::tuple<int, int, int>, int> cells;
        for (int n = 1; n <= max_n; ++n) {
            for (const Poset& p : all_posets(n)) {
                SolveBudget b = make_budget(n);
                int d = exact_dim(p, b).value;
                int l = exact_ldim(p, b).value;
                ++cells[{n, d, l}];
            }
        }
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"n", "dim", "ldim", "classes"});
        for (const auto& [key, count] : cells)
            rows.push_back({std::to_string(std::get<0>(key)), std::to_string(std::get<1>(key)),
                            std::to_string(std::get<2>(key)), std::to_string(count)});
        print_table(std::cout, rows, tsv);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NodeLimitError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const SizeError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
