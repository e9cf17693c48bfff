#include "lieclass/cli.hpp"

#include "lieclass/classifier.hpp"
#include "lieclass/dynkin_index.hpp"
#include "lieclass/errors.hpp"
#include "lieclass/fixtures.hpp"
#include "lieclass/geometry.hpp"
#include "lieclass/rational_topology.hpp"
#include "lieclass/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace lieclass {

namespace {

/// Result of one verb: the JSON payload, an optional hand-written text form
/// (otherwise render_text of the payload) and the exit status.
struct Output {
    Json payload;
    std::string text;
    int status = 0;
};

Int parse_positive(const std::string& what, const std::string& text)
{
    if (text.empty() || text.size() > 30 || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        }))
        throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
    return Int(text);
}

Json rows_json(const std::vector<CandidatePair>& rows)
{
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    return Json{{"count", rows.size()}, {"rows", a}};
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

/// Weight given in the labels of a (possibly non-canonical) family, moved to
/// the labels of the canonical type.
DominantWeight relabeled_weight(const Canonical& c, const std::string& text)
{
    const auto given = parse_int_list(text, "weight");
    if (static_cast<int>(given.size()) != c.type.rank)
        throw DomainError("weight for " + c.type.name() + " needs " + std::to_string(c.type.rank) +
                          " coefficients, got " + std::to_string(given.size()));
    std::vector<int> coeffs(given.size(), 0);
    for (std::size_t i = 0; i < given.size(); ++i) {
        if (given[i] < 0) throw DomainError("weight coefficients must be non-negative");
        coeffs[c.relabel.empty() ? i : c.relabel[i]] = static_cast<int>(given[i]);
    }
    return make_weight(c.type, coeffs);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Lie-theoretic tables and the two-sphere classification search", "lieclass"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "text"}))
        ->capture_default_str();

    std::function<Output()> action;

    // exponents <family> <rank>
    std::string ex_family;
    int ex_rank = 0;
    auto* ex = app.add_subcommand("exponents", "Degrees of the primitive generators of H*(G;Q)");
    ex->add_option("family", ex_family, "Family letter (A..G) or exceptional name")->required();
    ex->add_option("rank", ex_rank, "Rank")->required();
    ex->callback([&] {
        action = [&] {
            const SimpleType t = canonicalize(ex_family, ex_rank).type;
            const auto e = exponents(t);
            return Output{Json{{"exponents", e}}, join_ints(e) + "\n"};
        };
    });

    // irreps <family> <rank> --max-dim N [--field r|c|h]
    std::string ir_family, ir_max, ir_field;
    int ir_rank = 0;
    auto* ir = app.add_subcommand("irreps", "Irreducible representations up to a complex dimension");
    ir->add_option("family", ir_family, "Family letter")->required();
    ir->add_option("rank", ir_rank, "Rank")->required();
    ir->add_option("--max-dim", ir_max, "Largest complex dimension")->required();
    ir->add_option("--field", ir_field, "Keep only real (r), complex (c) or quaternionic (h) type")
        ->check(CLI::IsMember({"r", "c", "h"}));
    ir->callback([&] {
        action = [&] {
            const Canonical c = canonicalize(ir_family, ir_rank);
            const auto all = enumerate_irreps(c.type, parse_positive("--max-dim", ir_max));
            Json a = Json::array();
            for (const auto& d : all) {
                const char f = static_cast<char>(std::tolower(field_char(d.field)));
                if (ir_field.empty() || ir_field[0] == f) a.push_back(to_json(d));
            }
            Json j{{"type", c.type.name()}, {"group", c.type.group_name()}, {"irreps", a}, {"count", a.size()}};
            if (!c.alias.empty()) j["alias"] = c.alias;
            return Output{j, ""};
        };
    });

    // index su2 <k> | index <family> <rank> --weight w
    std::string ix_target, ix_param, ix_weight;
    auto* ix = app.add_subcommand("index", "Dynkin index of a representation");
    ix->add_option("target", ix_target, "'su2' or a family letter")->required();
    ix->add_option("param", ix_param, "k for su2, otherwise the rank")->required();
    ix->add_option("--weight", ix_weight, "Dominant weight, e.g. \"1,0\"");
    ix->callback([&] {
        action = [&] {
            if (ix_target == "su2" || ix_target == "SU2") {
                if (!ix_weight.empty()) throw UsageError("index su2 takes no --weight");
                const Int j = su2_index(static_cast<long>(parse_positive("k", ix_param)));
                return Output{Json{{"index", to_json(j)}}, to_string(j) + "\n"};
            }
            if (ix_weight.empty()) throw UsageError("index <family> <rank> needs --weight");
            const Canonical c = canonicalize(ix_target, static_cast<int>(parse_positive("rank", ix_param)));
            const DominantWeight w = relabeled_weight(c, ix_weight);
            Json j{{"type", c.type.name()},
                   {"weight", w.str()},
                   {"dim_c", to_json(dim_complex(w))},
                   {"index", to_json(index_of_rep(w))}};
            return Output{j, ""};
        };
    });

    // pi3 --matrix "a,b;c,d"
    std::string p3_matrix;
    auto* p3 = app.add_subcommand("pi3", "Cokernel of an index matrix pi_3(H) -> pi_3(G)");
    p3->add_option("--matrix", p3_matrix, "Rows separated by ';', entries by ','")->required();
    p3->callback([&] {
        action = [&] {
            const IntMatrix m = parse_matrix(p3_matrix);
            const AbelianGroup g = pi3_cokernel(m);
            Json f = Json::array();
            std::string fs;
            for (const auto& d : smith_invariants(m)) {
                f.push_back(to_json(d));
                fs += (fs.empty() ? "" : " ") + to_string(d);
            }
            Json j{{"pi3", g.str()}, {"invariant_factors", f}};
            return Output{j, g.str() + "\ninvariant factors: " + (fs.empty() ? "(none)" : fs) + "\n"};
        };
    });

    // homotopy --free "3,5" | --truncated "4^2;11"
    std::string ho_free, ho_trunc;
    auto* ho = app.add_subcommand("homotopy", "Rational homotopy ranks of a minimal cohomology model");
    auto* ho_f = ho->add_option("--free", ho_free, "Free algebra: generator degrees, e.g. \"3,5\"");
    auto* ho_t = ho->add_option("--truncated", ho_trunc, "Q[a]/(a^m) x E(odd): \"deg^m;odd,...\"");
    ho_f->excludes(ho_t);
    ho->require_option(1);
    ho->callback([&] {
        action = [&] {
            RankTable t;
            Json j;
            if (!ho_free.empty()) {
                t = homotopy_ranks_free(parse_free_spec(ho_free));
                j["free"] = ho_free;
            } else {
                t = homotopy_ranks_truncated(parse_truncated_spec(ho_trunc));
                j["truncated"] = ho_trunc;
            }
            j["ranks"] = to_json(t);
            j["total"] = total_rank(t);
            return Output{j, ""};
        };
    });

    // classify
    Query q;
    int cl_n1 = 0, cl_n2 = 0;
    auto* cl = app.add_subcommand("classify", "Homogeneous spaces with the rational cohomology of spheres");
    cl->add_option("--pattern", q.pattern, "SxS or S")->check(CLI::IsMember({"SxS", "S"}))->capture_default_str();
    auto* cl_o1 = cl->add_option("--n1", cl_n1, "First sphere dimension");
    auto* cl_o2 = cl->add_option("--n2", cl_n2, "Second sphere dimension");
    cl->add_option("--max-rank", q.max_rank, "Largest rank of G")->capture_default_str();
    cl->add_option("--case", q.search, "auto|1|2|sphere|semisimple|split|nonsplit")->capture_default_str();
    cl->add_flag("--rational-only", q.rational_only, "Skip the integral (torsion) filter");
    cl->add_flag("--include-infeasible", q.include_infeasible, "Also list rows without a module witness");
    cl->callback([&] {
        action = [&] {
            if (cl_o1->count()) q.n1 = cl_n1;
            if (cl_o2->count()) q.n2 = cl_n2;
            return Output{rows_json(classify(q)), ""};
        };
    });

    // spheres
    int sp_rank = 6;
    auto* sp = app.add_subcommand("spheres", "Homogeneous spheres K/H");
    sp->add_option("--max-rank", sp_rank, "Largest rank of K")->capture_default_str();
    sp->callback([&] {
        action = [&] {
            Query s;
            s.pattern = "S";
            s.search = "sphere";
            s.max_rank = sp_rank;
            return Output{rows_json(classify(s)), ""};
        };
    });

    // quadrangle <m1> <m2> [--candidates --max-rank R]
    int qu_m1 = 0, qu_m2 = 0, qu_rank = 8;
    bool qu_cand = false;
    auto* qu = app.add_subcommand("quadrangle", "Constraints on multiplicities (m1, m2)");
    qu->add_option("m1", qu_m1, "First multiplicity")->required();
    qu->add_option("m2", qu_m2, "Second multiplicity")->required();
    qu->add_flag("--candidates", qu_cand, "List homogeneous candidates for the point space");
    qu->add_option("--max-rank", qu_rank, "Rank cap for --candidates")->capture_default_str();
    qu->callback([&] {
        action = [&] {
            const MultiplicityPair p = make_multiplicities(qu_m1, qu_m2);
            Json j = to_json(report(p));
            if (qu_cand) j["candidates"] = rows_json(candidate_point_spaces(p, qu_rank));
            return Output{j, ""};
        };
    });

    // atlas --max N
    int at_max = 25;
    auto* at = app.add_subcommand("atlas", "Realized (n1, n2 - n1) points of the classification");
    at->add_option("--max", at_max, "Bound on n1 and on n2 - n1")->capture_default_str();
    at->callback([&] {
        action = [&] {
            Json a = Json::array();
            for (const auto& p : atlas(at_max)) a.push_back(to_json(p));
            return Output{Json{{"max", at_max}, {"points", a}}, ""};
        };
    });

    // dump-tables [--max-rank R]
    int dt_rank = 12;
    auto* dt = app.add_subcommand("dump-tables", "Static data of every simple type");
    dt->add_option("--max-rank", dt_rank, "Largest rank")->capture_default_str();
    dt->callback([&] {
        action = [&] {
            if (dt_rank < 1) throw DomainError("--max-rank must be at least 1");
            return Output{dump_tables(dt_rank), ""};
        };
    });

    // verify-fixtures [id|all]
    std::string vf_id = "all";
    auto* vf = app.add_subcommand("verify-fixtures", "Recompute a reference table and diff it");
    vf->add_option("id", vf_id, "Fixture id or 'all'")->capture_default_str();
    vf->callback([&] {
        action = [&] {
            std::vector<std::string> ids = vf_id == "all" ? fixture_ids() : std::vector<std::string>{vf_id};
            Json a = Json::array();
            int status = 0;
            for (const auto& id : ids) {
                const auto diff = reproduce_tables(id);
                if (!diff.empty()) status = 1;
                a.push_back(Json{{"id", id}, {"ok", diff.empty()}, {"diff", diff}});
            }
            return Output{Json{{"fixtures", a}}, "", status};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Output o = action();
        if (format == "json")
            out << dump_json(o.payload);
        else
            out << (o.text.empty() ? render_text(o.payload) : o.text);
        return o.status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lieclass
