#include "pyramid/json_io.hpp"

#include <algorithm>

namespace pyramid {

Json series_to_json(const Series& s) {
    Json j;
    j["vars"] = s.vars() == SeriesVars::Q0Q1 ? Json::array({"q0", "q1"}) : Json::array({"z", "q"});
    if (s.trunc().total_mode())
        j["max_total_degree"] = s.trunc().total;
    else
        j["max_degrees"] = {s.trunc().deg0, s.trunc().deg1};
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms()) {
        Json t;
        t["e0"] = m.e0;
        t["e1"] = m.e1;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Series series_from_json(const Json& j) {
    SeriesVars vars =
        j.at("vars") == Json::array({"q0", "q1"}) ? SeriesVars::Q0Q1 : SeriesVars::ZQ;
    TruncSpec t;
    if (j.contains("max_total_degree"))
        t = TruncSpec::by_total(j.at("max_total_degree").get<int>());
    else
        t = TruncSpec::per_variable(j.at("max_degrees").at(0).get<int>(),
                                    j.at("max_degrees").at(1).get<int>());
    Series s(vars, t);
    for (const auto& term : j.at("terms"))
        s.add_term({term.at("e0").get<int>(), term.at("e1").get<int>()},
                   BigInt(term.at("c").get<std::string>()));
    return s;
}

Json dimer_to_json(const Dimer& d) {
    return Json::array({Json::array({d.u.x, d.u.y}), Json::array({d.v.x, d.v.y})});
}

Dimer dimer_from_json(const Json& j) {
    return Dimer({j.at(0).at(0).get<int>(), j.at(0).at(1).get<int>()},
                 {j.at(1).at(0).get<int>(), j.at(1).at(1).get<int>()});
}

Json config_to_json(const DimerConfig& cfg) {
    Json j;
    j["n"] = cfg.n;
    j["window"] = {cfg.win.xmin, cfg.win.ymin, cfg.win.xmax, cfg.win.ymax};
    Json dd = Json::array();
    for (const Dimer& d : cfg.added) dd.push_back(dimer_to_json(d));
    j["diff_dimers"] = std::move(dd);
    return j;
}

DimerConfig config_from_json(const Json& j, const Board& eps) {
    Window w{j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>(),
             j.at("window").at(2).get<int>(), j.at("window").at(3).get<int>()};
    if (!(w == eps.window()))
        throw std::invalid_argument("configuration window does not match the empty room");
    Board b = eps;
    std::vector<Dimer> added;
    for (const auto& dj : j.at("diff_dimers")) added.push_back(dimer_from_json(dj));
    // The empty-room dimers sharing a vertex with an added dimer are the
    // removed ones.
    for (const Dimer& d : added)
        for (Vertex v : {d.u, d.v})
            if (b.covered(v)) b.remove(Dimer(v, b.mate(v)));
    for (const Dimer& d : added) b.add(d);
    return DimerConfig::from_board(j.at("n").get<int>(), b, eps);
}

Json deficient_to_json(const DeficientConfig& def) {
    // Serialized as the underlying partial cover: diff of the vertical
    // filling plus the missing corners.
    Json j = config_to_json(def.filled);
    Json miss = Json::array();
    for (Vertex c : def.missing) miss.push_back(Json::array({c.x, c.y}));
    j["missing"] = std::move(miss);
    j["missing_parity"] = def.missing_parity == Parity::Odd ? "odd" : "even";
    return j;
}

Json superrigid_to_json(const SuperRigid& sr) {
    Json j;
    j["lambda"] = sr.lambda.rows;
    auto boxes = [](const PlanePartition& p) {
        Json a = Json::array();
        for (auto [x, y, z] : p.extra) a.push_back(Json::array({x, y, z}));
        return a;
    };
    j["pi0_extra"] = boxes(sr.pi0);
    j["piInf_extra"] = boxes(sr.piInf);
    return j;
}

SuperRigid superrigid_from_json(const Json& j) {
    SuperRigid sr;
    sr.lambda = YoungDiagram(j.at("lambda").get<std::vector<int>>());
    auto boxes = [](const Json& a) {
        std::vector<std::array<int, 3>> out;
        for (const auto& b : a)
            out.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()});
        std::sort(out.begin(), out.end());
        return out;
    };
    sr.pi0 = PlanePartition{sr.lambda, boxes(j.at("pi0_extra"))};
    sr.piInf = PlanePartition{sr.lambda, boxes(j.at("piInf_extra"))};
    if (!sr.pi0.closed() || !sr.piInf.closed())
        throw std::invalid_argument("super-rigid partition boxes are not closed");
    return sr;
}

} // namespace pyramid
