#include "rcg/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rcg/error.hpp"
#include "rcg/insertion.hpp"
#include "rcg/json_io.hpp"
#include "rcg/lr.hpp"
#include "rcg/perm.hpp"
#include "rcg/poly.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/selftest.hpp"
#include "rcg/tableau.hpp"

namespace rcg {

namespace {

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string perm_line(const Permutation& w) {
    return to_json(w).dump();
}

std::string poly_line(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c << "*x^(";
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (t) os << ",";
            os << e[t];
        }
        os << ")";
    }
    return os.str();
}

std::string crossing_text(const Crossing& c) {
    return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"rc-graph engine: Schubert times Schur products by "
                 "insertion counting, with a polynomial cross-check"};
    app.fallthrough(true);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string perm_arg;
    std::string partition_arg;
    std::string rcgraph_arg;
    std::string word_arg;
    int n_arg = 0;
    int c_arg = 0;
    int d_arg = 0;
    int m_arg = 0;
    bool parse_flag = false;
    bool no_checks = false;

    CLI::App* cmd_enumerate = app.add_subcommand(
        "enumerate", "list all rc-graphs of a permutation, or all "
                     "semistandard tableaux of a shape");
    cmd_enumerate->add_option("--perm", perm_arg, "permutation JSON");
    cmd_enumerate->add_option("--partition", partition_arg, "partition JSON");
    cmd_enumerate->add_option("--n", n_arg, "number of rows / largest entry");

    CLI::App* cmd_top = app.add_subcommand(
        "top", "the left-justified rc-graph of a permutation");
    cmd_top->add_option("--perm", perm_arg, "permutation JSON")->required();
    cmd_top->add_option("--n", n_arg, "number of rows");

    CLI::App* cmd_insert =
        app.add_subcommand("insert", "insert a word into an rc-graph");
    cmd_insert->add_option("--rcgraph", rcgraph_arg, "rc-graph JSON")
        ->required();
    cmd_insert->add_option("--word", word_arg, "JSON list of rows to insert")
        ->required();

    CLI::App* cmd_inverse = app.add_subcommand(
        "inverse-insert", "undo one insertion given the final strand labels");
    cmd_inverse->add_option("--rcgraph", rcgraph_arg, "rc-graph JSON")
        ->required();
    cmd_inverse->add_option("--c", c_arg, "positive strand label")->required();
    cmd_inverse->add_option("--d", d_arg, "nonpositive strand label")
        ->required();

    CLI::App* cmd_word = app.add_subcommand(
        "word", "reading word and trace permutation of an rc-graph");
    cmd_word->add_option("--rcgraph", rcgraph_arg, "rc-graph JSON")->required();

    CLI::App* cmd_render =
        app.add_subcommand("render", "ASCII picture of an rc-graph");
    cmd_render->add_option("--rcgraph", rcgraph_arg, "rc-graph JSON");
    cmd_render->add_flag("--parse", parse_flag,
                         "read an ASCII picture from stdin instead");

    CLI::App* cmd_schubert = app.add_subcommand(
        "schubert", "Schubert polynomial of a class permutation");
    cmd_schubert->add_option("--perm", perm_arg, "permutation JSON")
        ->required();
    cmd_schubert->add_option("--n", n_arg, "number of variables");

    CLI::App* cmd_schur =
        app.add_subcommand("schur", "Schur polynomial of a partition");
    cmd_schur->add_option("--partition", partition_arg, "partition JSON")
        ->required();
    cmd_schur->add_option("--n", n_arg, "number of variables")->required();

    CLI::App* cmd_lr = app.add_subcommand(
        "lr", "expand a Schubert times Schur product by counting "
              "insertion pairs");
    cmd_lr->add_option("--perm", perm_arg, "permutation JSON")->required();
    cmd_lr->add_option("--partition", partition_arg, "partition JSON")
        ->required();
    cmd_lr->add_option("--n", n_arg, "number of rows");
    cmd_lr->add_flag("--no-checks", no_checks,
                     "skip the per-call verification sweeps");

    CLI::App* cmd_pieri = app.add_subcommand(
        "pieri", "one-row multiplication by transposition chains");
    cmd_pieri->add_option("--perm", perm_arg, "permutation JSON")->required();
    cmd_pieri->add_option("--m", m_arg, "row length")->required();
    cmd_pieri->add_option("--n", n_arg, "number of rows");

    CLI::App* cmd_jt = app.add_subcommand(
        "jacobi-trudi", "signed h-product expansion of a shape");
    cmd_jt->add_option("--partition", partition_arg, "partition JSON")
        ->required();

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "cross-check the counted expansion against polynomial "
                  "arithmetic");
    cmd_verify->add_option("--perm", perm_arg, "permutation JSON")->required();
    cmd_verify->add_option("--partition", partition_arg, "partition JSON")
        ->required();
    cmd_verify->add_option("--n", n_arg, "number of rows");

    CLI::App* cmd_selftest =
        app.add_subcommand("selftest", "run the full acceptance suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    const bool text = format == "text";
    try {
        if (cmd_enumerate->parsed()) {
            if (perm_arg.empty() == partition_arg.empty()) {
                throw InputError(
                    "enumerate needs exactly one of --perm or --partition");
            }
            if (!perm_arg.empty()) {
                const Permutation w =
                    permutation_from_json(parse_json(perm_arg));
                const int n = cmd_enumerate->count("--n") ? n_arg : w.n();
                const std::vector<RcGraph> items = enumerate_rcgraphs(w, n);
                if (text) {
                    out << "count " << items.size() << "\n";
                    for (const RcGraph& r : items) out << "\n" << render(r);
                } else {
                    Json list = Json::array();
                    for (const RcGraph& r : items) list.push_back(to_json(r));
                    emit(out, Json{{"count", items.size()}, {"items", list}});
                }
            } else {
                if (!cmd_enumerate->count("--n")) {
                    throw InputError("enumerating tableaux needs --n");
                }
                const Partition mu =
                    partition_from_json(parse_json(partition_arg));
                const std::vector<Tableau> items = enumerate_ssyt(mu, n_arg);
                if (text) {
                    out << "count " << items.size() << "\n";
                    for (const Tableau& y : items) {
                        out << "\n";
                        for (const auto& row : y.rows()) {
                            for (std::size_t t = 0; t < row.size(); ++t) {
                                out << (t ? " " : "") << row[t];
                            }
                            out << "\n";
                        }
                    }
                } else {
                    Json list = Json::array();
                    for (const Tableau& y : items) list.push_back(to_json(y));
                    emit(out, Json{{"count", items.size()}, {"items", list}});
                }
            }
        } else if (cmd_top->parsed()) {
            const Permutation w = permutation_from_json(parse_json(perm_arg));
            const int n = cmd_top->count("--n") ? n_arg : w.n();
            const RcGraph top = top_rcgraph(w, n);
            if (text) {
                out << render(top);
            } else {
                emit(out, to_json(top));
            }
        } else if (cmd_insert->parsed()) {
            const RcGraph start = rcgraph_from_json(parse_json(rcgraph_arg));
            Word word;
            for (const Json& x : parse_json(word_arg)) {
                if (!x.is_number_integer()) {
                    throw InputError("word entries must be integers");
                }
                word.push_back(x.get<int>());
            }
            for (int k : word) {
                if (k < 1 || k > start.n()) {
                    throw InputError("word entry out of range");
                }
            }
            RcGraph cur = start;
            std::vector<InsertionTrace> traces;
            for (int k : word) {
                InsertionResult res = insert(cur, k);
                traces.push_back(res.trace);
                cur = res.result;
            }
            if (text) {
                out << render(cur);
                for (const InsertionTrace& tr : traces) {
                    out << "steps:";
                    for (const InsertionStep& s : tr.steps) {
                        out << " ";
                        if (s.removed) {
                            out << "remove " << crossing_text(*s.removed)
                                << ", ";
                        }
                        out << "insert " << crossing_text(s.inserted);
                    }
                    out << "; transposition (" << tr.final_c << ","
                        << tr.final_d << ")\n";
                }
            } else {
                Json list = Json::array();
                for (const InsertionTrace& tr : traces) {
                    list.push_back(to_json(tr));
                }
                emit(out, Json{{"result", to_json(cur)}, {"traces", list}});
            }
        } else if (cmd_inverse->parsed()) {
            const RcGraph r = rcgraph_from_json(parse_json(rcgraph_arg));
            const InverseInsertion inv = inverse_insert(r, c_arg, d_arg);
            if (text) {
                out << render(inv.source) << "row " << inv.row << "\n";
            } else {
                emit(out, to_json(inv));
            }
        } else if (cmd_word->parsed()) {
            const RcGraph r = rcgraph_from_json(parse_json(rcgraph_arg));
            const Word word = reading_word(r);
            const Permutation w = trace(r);
            if (text) {
                out << "word:";
                for (int letter : word) out << " " << letter;
                out << "\n" << "trace: " << perm_line(w) << "\n";
            } else {
                emit(out, Json{{"word", word}, {"trace", to_json(w)}});
            }
        } else if (cmd_render->parsed()) {
            if (parse_flag == !rcgraph_arg.empty()) {
                throw InputError(
                    "render needs exactly one of --rcgraph or --parse");
            }
            if (parse_flag) {
                std::ostringstream buf;
                buf << in.rdbuf();
                const RcGraph r = parse_render(buf.str());
                if (text) {
                    out << render(r);
                } else {
                    emit(out, to_json(r));
                }
            } else {
                const RcGraph r = rcgraph_from_json(parse_json(rcgraph_arg));
                if (text) {
                    out << render(r);
                } else {
                    emit(out, Json{{"render", render(r)}});
                }
            }
        } else if (cmd_schubert->parsed()) {
            const Permutation w = permutation_from_json(parse_json(perm_arg));
            const int n = cmd_schubert->count("--n") ? n_arg : w.n();
            const SparsePolynomial p = schubert(w, n);
            if (text) {
                out << poly_line(p) << "\n";
            } else {
                emit(out, to_json(p));
            }
        } else if (cmd_schur->parsed()) {
            const Partition mu = partition_from_json(parse_json(partition_arg));
            const SparsePolynomial p = schur(mu, n_arg);
            if (text) {
                out << poly_line(p) << "\n";
            } else {
                emit(out, to_json(p));
            }
        } else if (cmd_lr->parsed()) {
            const Permutation w = permutation_from_json(parse_json(perm_arg));
            const Partition mu = partition_from_json(parse_json(partition_arg));
            const int n = cmd_lr->count("--n") ? n_arg : w.n();
            const LrResult res = lr_coefficients(w, mu, n, !no_checks);
            if (text) {
                for (const auto& [u, c] : res.coefficients) {
                    out << perm_line(u) << " : " << c << "\n";
                }
            } else {
                emit(out, to_json(res));
            }
        } else if (cmd_pieri->parsed()) {
            const Permutation w = permutation_from_json(parse_json(perm_arg));
            const int n = cmd_pieri->count("--n") ? n_arg : w.n();
            const std::map<Permutation, long long> ends =
                pieri_chains(w, m_arg, n);
            if (text) {
                for (const auto& [u, c] : ends) {
                    out << perm_line(u) << " : " << c << "\n";
                }
            } else {
                Json list = Json::array();
                for (const auto& [u, c] : ends) {
                    list.push_back(Json{{"u", to_json(u)}, {"c", c}});
                }
                emit(out, Json{{"ends", list}});
            }
        } else if (cmd_jt->parsed()) {
            const Partition mu = partition_from_json(parse_json(partition_arg));
            const JTExpansion jt = jacobi_trudi(mu);
            if (text) {
                const auto side = [&](const char* sign, const auto& terms) {
                    for (const auto& [seq, count] : terms) {
                        out << sign << " " << count << " * h(";
                        for (std::size_t t = 0; t < seq.size(); ++t) {
                            out << (t ? "," : "") << seq[t];
                        }
                        out << ")\n";
                    }
                };
                side("+", jt.plus);
                side("-", jt.minus);
            } else {
                emit(out, to_json(jt));
            }
        } else if (cmd_verify->parsed()) {
            const Permutation w = permutation_from_json(parse_json(perm_arg));
            const Partition mu = partition_from_json(parse_json(partition_arg));
            const int n = cmd_verify->count("--n") ? n_arg : w.n();
            const VerifyReport rep = verify_identity(w, mu, n);
            if (text) {
                out << (rep.pass ? "PASS" : "FAIL") << ": "
                    << rep.coefficients.size() << " basis terms";
                if (!rep.first_discrepancy.empty()) {
                    out << "; " << rep.first_discrepancy;
                }
                out << "\n";
            } else {
                emit(out, to_json(rep));
            }
            return rep.pass ? 0 : 1;
        } else if (cmd_selftest->parsed()) {
            return run_selftest(out);
        } else {
            out << app.help();
            return 0;
        }
    } catch (const InputError& ex) {
        err << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const ClassError& ex) {
        err << "class violation: " << ex.what() << "\n";
        return 3;
    } catch (const std::logic_error& ex) {
        err << "verification failure: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rcg
