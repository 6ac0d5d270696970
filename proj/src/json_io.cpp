#include "rcg/json_io.hpp"

#include <map>
#include <utility>
#include <vector>

#include "rcg/error.hpp"

namespace rcg {

namespace {

// Reruns the parse body with json/stoi failures turned into InputError,
// leaving domain errors untouched.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InputError&) {
        throw;
    } catch (const ClassError&) {
        throw;
    } catch (const std::exception& ex) {
        throw InputError(std::string("invalid ") + what + ": " + ex.what());
    }
}

}  // namespace

Json to_json(const Permutation& w) {
    Json images = Json::object();
    for (int i = w.low(); i <= w.n(); ++i) {
        images[std::to_string(i)] = w(i);
    }
    return Json{{"n", w.n()}, {"images", images}};
}

Permutation permutation_from_json(const Json& j) {
    return guarded("permutation", [&] {
        const int n = j.at("n").get<int>();
        const Json& images = j.at("images");
        if (!images.is_object()) throw InputError("images must be an object");
        std::map<int, int> m;
        for (auto it = images.begin(); it != images.end(); ++it) {
            std::size_t used = 0;
            const int key = std::stoi(it.key(), &used);
            if (used != it.key().size()) {
                throw InputError("image positions must be integers");
            }
            m[key] = it.value().get<int>();
        }
        if (m.empty()) return Permutation::identity(n);
        return Permutation::from_images(n, m.begin()->first, m);
    });
}

Json to_json(const RcGraph& r) {
    Json crossings = Json::array();
    for (const Crossing& c : r.crossings()) {
        crossings.push_back(Json::array({c.col, c.row}));
    }
    return Json{{"n", r.n()}, {"crossings", crossings}};
}

RcGraph rcgraph_from_json(const Json& j) {
    return guarded("rc-graph", [&] {
        const int n = j.at("n").get<int>();
        std::vector<Crossing> crossings;
        for (const Json& c : j.at("crossings")) {
            if (!c.is_array() || c.size() != 2) {
                throw InputError("crossings must be [column, row] pairs");
            }
            crossings.push_back({c[0].get<int>(), c[1].get<int>()});
        }
        return RcGraph(n, crossings);
    });
}

Json to_json(const Tableau& y) {
    return Json{{"n", y.n()}, {"rows", y.rows()}};
}

Tableau tableau_from_json(const Json& j) {
    return guarded("tableau", [&] {
        return Tableau(j.at("n").get<int>(),
                       j.at("rows").get<std::vector<std::vector<int>>>());
    });
}

Json to_json(const Partition& mu) { return Json(mu.parts()); }

Partition partition_from_json(const Json& j) {
    return guarded("partition", [&] {
        return Partition(j.get<std::vector<int>>());
    });
}

Json to_json(const SparsePolynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        out.push_back(Json{{"e", e}, {"c", c}});
    }
    return out;
}

SparsePolynomial polynomial_from_json(const Json& j, int n) {
    return guarded("polynomial", [&] {
        SparsePolynomial p(n);
        for (const Json& term : j) {
            p.add_term(term.at("e").get<std::vector<int>>(),
                       term.at("c").get<long long>());
        }
        return p;
    });
}

Json to_json(const InsertionStep& s) {
    Json removed;
    if (s.removed) removed = Json::array({s.removed->col, s.removed->row});
    return Json{{"row", s.row},
                {"removed", removed},
                {"inserted", Json::array({s.inserted.col, s.inserted.row})},
                {"label_west", s.label_west},
                {"label_south", s.label_south}};
}

Json to_json(const InsertionTrace& t) {
    Json steps = Json::array();
    for (const InsertionStep& s : t.steps) steps.push_back(to_json(s));
    return Json{{"steps", steps},
                {"final_c", t.final_c},
                {"final_d", t.final_d}};
}

Json to_json(const InverseInsertion& inv) {
    return Json{{"source", to_json(inv.source)}, {"row", inv.row}};
}

Json to_json(const LrResult& res) {
    Json coefficients = Json::array();
    for (const auto& [u, c] : res.coefficients) {
        coefficients.push_back(Json{{"u", to_json(u)}, {"c", c}});
    }
    Json witnesses = Json::array();
    for (const auto& [u_graph, pairs] : res.witnesses) {
        Json list = Json::array();
        for (const auto& [r, y] : pairs) {
            list.push_back(Json{{"rcgraph", to_json(r)}, {"tableau", to_json(y)}});
        }
        witnesses.push_back(Json{{"result", to_json(u_graph)}, {"pairs", list}});
    }
    return Json{{"w", to_json(res.w)},
                {"mu", to_json(res.mu)},
                {"n", res.n},
                {"coefficients", coefficients},
                {"witnesses", witnesses},
                {"checks", Json{{"u_independence", res.checks.u_independence},
                                {"counting_identity",
                                 res.checks.counting_identity}}}};
}

Json to_json(const JTExpansion& jt) {
    const auto side = [](const std::map<std::vector<int>, long long>& s) {
        Json out = Json::array();
        for (const auto& [seq, count] : s) {
            out.push_back(Json{{"h", seq}, {"count", count}});
        }
        return out;
    };
    return Json{{"plus", side(jt.plus)}, {"minus", side(jt.minus)}};
}

Json to_json(const VerifyReport& rep) {
    Json coefficients = Json::array();
    for (const auto& [u, c] : rep.coefficients) {
        coefficients.push_back(Json{{"u", to_json(u)}, {"c", c}});
    }
    return Json{{"pass", rep.pass},
                {"polynomial_match", rep.polynomial_match},
                {"expansion_match", rep.expansion_match},
                {"coefficients", coefficients},
                {"product", to_json(rep.product)},
                {"reconstruction", to_json(rep.reconstruction)},
                {"first_discrepancy", rep.first_discrepancy}};
}

Json parse_json(const std::string& text) {
    return guarded("JSON", [&] { return Json::parse(text); });
}

}  // namespace rcg
