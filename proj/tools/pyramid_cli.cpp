#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "pyramid/enumerate.hpp"
#include "pyramid/json_io.hpp"
#include "pyramid/phi.hpp"
#include "pyramid/shuffle.hpp"
#include "pyramid/svg.hpp"
#include "pyramid/verify.hpp"
#include "pyramid/weights.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace pyramid;

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << data;
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    Json j;
    f >> j;
    return j;
}

int cmd_enumerate(int n, int D, bool emit_configs, const std::string& out) {
    Enumerated e = enumerate_partitions(n, D);
    Json j;
    j["n"] = n;
    j["max_degree"] = D;
    j["count"] = e.items.size();
    j["sum"] = series_to_json(e.sum);
    if (emit_configs) {
        Json cfgs = Json::array();
        for (const auto& [cfg, w] : e.items) {
            Json c = config_to_json(cfg);
            c["w0"] = {w.e0, w.e1};
            cfgs.push_back(std::move(c));
        }
        j["configs"] = std::move(cfgs);
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_shuffle(const std::string& input, const std::string& fill, const std::string& out,
                bool emit_stages) {
    Json in = read_json_file(input);
    Window w{in.at("window").at(0).get<int>(), in.at("window").at(1).get<int>(),
             in.at("window").at(2).get<int>(), in.at("window").at(3).get<int>()};
    int n = in.at("n").get<int>();
    Board eps = empty_room_board(n, w);
    DimerConfig cfg = config_from_json(in, eps);
    Coloring col = Coloring::usual(n);

    DeleteResult del = delete_blocks(cfg.to_board(eps), Parity::Odd, col);
    SlideResult sl = slide(del.board, col);
    Board eps_next = empty_room_board(n + 1, sl.board.window());

    Json j;
    j["input_n"] = n;
    j["deleted_blocks"] = del.corners.size();
    j["missing_after_slide"] = sl.missing.size();
    if (emit_stages) {
        DeficientConfig and_deleted;
        and_deleted.filled = cfg;
        and_deleted.missing = del.corners;
        and_deleted.missing_parity = Parity::Odd;
        j["deleted"] = deficient_to_json(and_deleted);
    }

    std::vector<unsigned long> masks;
    size_t m = sl.missing.size();
    if (fill == "all") {
        for (unsigned long mask = 0; mask < (1UL << m); ++mask) masks.push_back(mask);
    } else if (fill == "vertical") {
        masks.push_back(0);
    } else {
        // bit string over the sorted missing corners, e.g. "0110"
        if (fill.size() != m)
            throw std::invalid_argument("fill mask length must equal the missing block count");
        unsigned long mask = 0;
        for (size_t i = 0; i < m; ++i) {
            if (fill[i] == '1') mask |= 1UL << i;
            else if (fill[i] != '0') throw std::invalid_argument("fill mask must be 0/1 digits");
        }
        masks.push_back(mask);
    }
    Json outs = Json::array();
    for (unsigned long mask : masks) {
        Board filled = fill_blocks(sl.board, sl.missing, mask);
        outs.push_back(config_to_json(DimerConfig::from_board(n + 1, filled, eps_next)));
    }
    j["outputs"] = std::move(outs);
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_weights_dump(int n, int level, int half_window, const std::string& out) {
    Window w = Window::centered(half_window + level);
    WeightField f = build_w0_field(Coloring::usual(n), w);
    for (int a = 0; a < level; ++a) f = transport_field(f);
    Json j;
    j["n"] = n;
    j["level"] = level;
    j["coloring"] = f.coloring().c;
    const Window& fw = f.window();
    j["window"] = {fw.xmin, fw.ymin, fw.xmax, fw.ymax};
    Json edges = Json::array();
    for (int y = fw.ymin; y <= fw.ymax; ++y)
        for (int x = fw.xmin; x < fw.xmax; ++x) {
            Monomial m = f.horizontal({x, y});
            edges.push_back(Json{{"x", x}, {"y", y}, {"e0", m.e0}, {"e1", m.e1}});
        }
    j["horizontal_edges"] = std::move(edges);
    j["vertical_edges"] = "all weight 1";
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_solid_enumerate(int max_N, int n, const std::string& out) {
    Json j;
    j["max_N"] = max_N;
    j["n"] = n;
    Json triples = Json::array();
    for (const auto& [sr, w] : enumerate_superrigid(max_N, n)) {
        Json t = superrigid_to_json(sr);
        t["z_exp"] = w.e0;
        t["q_exp"] = w.e1;
        triples.push_back(std::move(t));
    }
    j["triples"] = std::move(triples);
    j["sum"] = series_to_json(superrigid_sum(max_N, n, max_N, max_N));
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_solid_render(const std::string& input, int window, const std::string& out) {
    SuperRigid sr = superrigid_from_json(read_json_file(input));
    auto [up, lo] = phi_render_halfplanes(sr, window, 2 * window);
    write_output(out, svg_of_halfplanes(up, lo));
    return 0;
}

int cmd_render(const std::string& input, const std::string& out) {
    Json in = read_json_file(input);
    Window w{in.at("window").at(0).get<int>(), in.at("window").at(1).get<int>(),
             in.at("window").at(2).get<int>(), in.at("window").at(3).get<int>()};
    int n = in.at("n").get<int>();
    Board eps = empty_room_board(n, w);
    Board b = config_from_json(in, eps).to_board(eps);
    std::vector<Vertex> missing;
    if (in.contains("missing")) {
        for (const auto& c : in.at("missing")) {
            Vertex v{c.at(0).get<int>(), c.at(1).get<int>()};
            missing.push_back(v);
            b.remove(Dimer({v.x, v.y}, {v.x, v.y + 1}));
            b.remove(Dimer({v.x + 1, v.y}, {v.x + 1, v.y + 1}));
        }
    }
    write_output(out, svg_of_cover(b, Coloring::usual(n), missing));
    return 0;
}

int cmd_verify(const std::string& id, int D, int n, int k, std::vector<int> lambda_rows,
               const std::string& format, bool timings, const std::string& out) {
    std::vector<CheckReport> reports;
    auto want = [&](const std::string& s) { return id == "all" || id == s; };
    if (want("theorem1")) reports.push_back(check_theorem1(D));
    if (want("general_n")) reports.push_back(check_eq_general_n(n, D));
    if (want("shuffle_recursion")) reports.push_back(check_shuffle_recursion(n, k, D));
    if (want("zx")) reports.push_back(check_zx(std::min(3, D), D));
    if (want("macmahon")) reports.push_back(check_macmahon(D));
    if (want("one_leg")) reports.push_back(check_one_leg(YoungDiagram(lambda_rows), D));
    if (want("cauchy")) reports.push_back(check_cauchy(n, D));
    if (reports.empty()) throw std::invalid_argument("unknown check id: " + id);

    bool all_equal = true;
    std::string text;
    Json jout = Json::array();
    for (const CheckReport& r : reports) {
        all_equal = all_equal && r.equal;
        jout.push_back(report_to_json(r, timings));
        text += report_to_text(r) + "\n";
    }
    write_output(out, format == "json" ? jout.dump(2) + "\n" : text);
    return all_equal ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pyramid partition shuffling and generating-function checks"};
    app.require_subcommand(1);
    app.fallthrough(); // global --out/--threads may follow the subcommand
    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads");
    std::string out;
    app.add_option("--out", out, "output path (default stdout)")->capture_default_str();

    auto* en = app.add_subcommand("enumerate", "enumerate pyramid partitions by weight degree");
    int en_n = 1, en_D = 4;
    bool en_emit = false;
    en->add_option("--n", en_n, "length")->check(CLI::PositiveNumber);
    en->add_option("--max-degree", en_D, "total degree bound")->check(CLI::NonNegativeNumber);
    en->add_flag("--emit-configs", en_emit, "include configuration JSON");
    std::string en_fmt = "json";
    en->add_option("--format", en_fmt)->check(CLI::IsMember({"json"}));

    auto* sh = app.add_subcommand("shuffle", "delete, slide, and refill one configuration");
    std::string sh_in, sh_fill = "all";
    bool sh_stages = false;
    sh->add_option("--input", sh_in, "configuration JSON")->required();
    sh->add_option("--fill", sh_fill, "vertical | all | 0/1 mask over missing blocks");
    sh->add_flag("--emit-stages", sh_stages, "include the deleted intermediate");

    auto* we = app.add_subcommand("weights", "weight field utilities");
    we->require_subcommand(1);
    auto* wd = we->add_subcommand("dump", "dump an edge weight field");
    int wd_n = 1, wd_level = 0, wd_window = 6;
    wd->add_option("--n", wd_n)->check(CLI::PositiveNumber);
    wd->add_option("--level", wd_level)->check(CLI::NonNegativeNumber);
    wd->add_option("--window", wd_window, "half width")->check(CLI::PositiveNumber);

    auto* so = app.add_subcommand("solid", "super-rigid partitions");
    so->require_subcommand(1);
    auto* se = so->add_subcommand("enumerate", "list triples with bounded weight exponent");
    int se_maxN = 4, se_n = 1;
    se->add_option("--max-n", se_maxN, "bound on the weight exponent N")->check(CLI::NonNegativeNumber);
    se->add_option("--n", se_n, "length parameter in N(n)")->check(CLI::PositiveNumber);
    auto* sr = so->add_subcommand("render", "render a triple as two half-plane covers");
    std::string sr_in;
    int sr_window = 10;
    sr->add_option("--input", sr_in)->required();
    sr->add_option("--window", sr_window, "half width")->check(CLI::PositiveNumber);

    auto* ve = app.add_subcommand("verify", "identity checks: enumeration vs closed form");
    std::string ve_id, ve_fmt = "text";
    int ve_D = 6, ve_n = 1, ve_k = 1;
    std::vector<int> ve_lambda{2, 1};
    bool ve_timings = false;
    ve->add_option("check", ve_id,
                   "theorem1|general_n|shuffle_recursion|zx|macmahon|one_leg|cauchy|all")
        ->required();
    ve->add_option("--degree", ve_D)->check(CLI::NonNegativeNumber);
    ve->add_option("--n", ve_n)->check(CLI::PositiveNumber);
    ve->add_option("--k", ve_k)->check(CLI::PositiveNumber);
    ve->add_option("--lambda", ve_lambda, "partition for one_leg");
    ve->add_option("--format", ve_fmt)->check(CLI::IsMember({"json", "text"}));
    ve->add_flag("--timings", ve_timings, "include elapsed times in JSON output");

    auto* re = app.add_subcommand("render", "render a configuration as SVG");
    std::string re_in;
    re->add_option("--input", re_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*en) return cmd_enumerate(en_n, en_D, en_emit, out);
        if (*sh) return cmd_shuffle(sh_in, sh_fill, out, sh_stages);
        if (*we) return cmd_weights_dump(wd_n, wd_level, wd_window, out);
        if (*se) return cmd_solid_enumerate(se_maxN, se_n, out);
        if (*sr) return cmd_solid_render(sr_in, sr_window, out);
        if (*ve) return cmd_verify(ve_id, ve_D, ve_n, ve_k, ve_lambda, ve_fmt, ve_timings, out);
        if (*re) return cmd_render(re_in, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
