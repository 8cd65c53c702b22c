// trilab: classify lattice triangles by their first two widths, enumerate the
// normal forms, and reproduce the derived counting and Ehrhart datasets.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "trilab/trilab.hpp"

using json = nlohmann::ordered_json;
using namespace trilab;

namespace {

constexpr Int kJsonExactMax = 9007199254740992;  // 2^53: larger values go out as strings

json json_int(Int v) {
    if (v > kJsonExactMax || v < -kJsonExactMax) return std::to_string(v);
    return v;
}

json json_point(Point p) { return json::array({json_int(p.x), json_int(p.y)}); }

json json_triangle(const Triangle& t) {
    return json::array({json_point(t.v1), json_point(t.v2), json_point(t.v3)});
}

json json_dual(const std::optional<DualVector>& u) {
    if (!u) return nullptr;
    return json::array({json_int(u->a), json_int(u->b)});
}

json json_map(const UnimodularMap& m) {
    json j;
    j["linear"] = json::array({json::array({json_int(m.m11), json_int(m.m12)}),
                               json::array({json_int(m.m21), json_int(m.m22)})});
    j["translation"] = json::array({json_int(m.t1), json_int(m.t2)});
    return j;
}

Triangle triangle_from(const std::vector<Int>& c, size_t offset = 0) {
    return {{c[offset], c[offset + 1]}, {c[offset + 2], c[offset + 3]}, {c[offset + 4], c[offset + 5]}};
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void emit_json(const json& j, const std::string& path) { write_text(j.dump() + "\n", path); }

std::string enumerate_csv(Int w1, Int w2) {
    std::ostringstream out;
    out << "family,w1,w2,x1,y1,x2,y2,x3,y3\n";
    for_each_normal_form(w1, w2, [&](const NormalForm& nf) {
        const Triangle& t = nf.triangle;
        out << family_name(nf.family) << ',' << nf.w1 << ',' << nf.w2 << ',' << t.v1.x << ',' << t.v1.y
            << ',' << t.v2.x << ',' << t.v2.y << ',' << t.v3.x << ',' << t.v3.y << '\n';
    });
    return out.str();
}

json normal_form_json(const NormalForm& nf) {
    json j;
    j["family"] = family_name(nf.family);
    j["w1"] = json_int(nf.w1);
    j["w2"] = json_int(nf.w2);
    switch (nf.family) {
        case Family::Segment: j["y1"] = json_int(nf.y1); break;
        case Family::LongEdge: j["y1"] = json_int(nf.y1); break;
        case Family::ShortEdge1:
            j["x2"] = json_int(nf.x2);
            j["y1"] = json_int(nf.y1);
            break;
        case Family::ShortEdge2:
            j["x2"] = json_int(nf.x2);
            j["y0"] = json_int(nf.y0);
            break;
    }
    j["triangle"] = json_triangle(nf.triangle);
    return j;
}

std::string bi_dataset_csv(const std::vector<BiRecord>& records) {
    std::ostringstream out;
    out << "b,i,max_w2,has_long_edge,count\n";
    for (const BiRecord& r : records)
        out << r.b << ',' << r.i << ',' << r.max_second_width << ',' << (r.has_long_edge ? 1 : 0) << ','
            << r.count << '\n';
    return out.str();
}

std::string bi_dataset_svg(const std::vector<BiRecord>& records, Int max_b, Int max_i) {
    const Int scale = 6;
    Int width = (max_b + 2) * scale, height = (max_i + 2) * scale;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    for (const BiRecord& r : records) {
        Int cx = (r.b + 1) * scale;
        Int cy = height - (r.i + 1) * scale;
        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\""
            << (r.has_long_edge ? "#d95f02" : "#1b9e77") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"lattice triangle classification by first and second width"};
    app.require_subcommand(1);

    int thread_cap = 0;  // TRILAB_THREADS caps whatever --threads asks for
    if (const char* env = std::getenv("TRILAB_THREADS")) thread_cap = std::max(1, std::atoi(env));
    int threads = thread_cap > 0 ? thread_cap : 1;

    std::vector<Int> coords;
    std::string json_path, csv_path, svg_path, format = "json";
    Int w1 = 0, w2 = 0, n = 0, max_deg = 0, a = 1, b = 1, nmax = 1;
    Int max_b = 100, max_i = 100, max_w2 = 100, cones = 0, dilate = -1;
    bool cumulative = false, check_q = false, check_series = false, oracle = false;

    auto* widths_cmd = app.add_subcommand("widths", "width profile of a triangle");
    widths_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->expected(6)->required();
    widths_cmd->add_option("--json", json_path, "write JSON to a file");

    auto* canon_cmd = app.add_subcommand("canon", "canonical form of a triangle");
    canon_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->expected(6)->required();
    canon_cmd->add_option("--json", json_path);

    auto* equiv_cmd = app.add_subcommand("equiv", "decide affine equivalence of two triangles");
    equiv_cmd->add_option("coords", coords, "two triangles, 12 integers")->expected(12)->required();
    equiv_cmd->add_option("--json", json_path);

    auto* enum_cmd = app.add_subcommand("enumerate", "list the normal forms with given widths");
    enum_cmd->add_option("--w1", w1)->required();
    enum_cmd->add_option("--w2", w2)->required();
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    enum_cmd->add_option("--json", json_path);
    enum_cmd->add_option("--csv", csv_path);

    auto* count_cmd = app.add_subcommand("count", "number of classes with given widths");
    count_cmd->add_option("--w1", w1)->required();
    count_cmd->add_option("--w2", w2)->required();
    count_cmd->add_flag("--cumulative", cumulative, "count classes fitting the w1 x w2 rectangle");
    count_cmd->add_option("--json", json_path);

    auto* square_cmd = app.add_subcommand("square-count", "classes inside the n x n square");
    square_cmd->add_option("--n", n)->required();
    square_cmd->add_flag("--check-q", check_q, "cross-check against the 4-simplex point count");
    square_cmd->add_flag("--check-series", check_series, "cross-check against the series coefficient");
    square_cmd->add_option("--json", json_path);

    auto* series_cmd = app.add_subcommand("series", "bivariate class-count series coefficients");
    series_cmd->add_option("--max-deg", max_deg)->required();
    series_cmd->add_option("--json", json_path);

    auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a triangle");
    aut_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->expected(6)->required();
    aut_cmd->add_flag("--oracle", oracle, "use the permutation-matrix test on the input labeling");
    aut_cmd->add_option("--json", json_path);

    auto* ehr_cmd = app.add_subcommand("ehrhart", "boundary/interior counts and Ehrhart polynomial");
    ehr_cmd->add_option("coords", coords, "x1 y1 x2 y2 x3 y3")->expected(6)->required();
    ehr_cmd->add_option("--dilate", dilate, "also evaluate the polynomial at this dilation");
    ehr_cmd->add_option("--json", json_path);

    auto* bi_cmd = app.add_subcommand("bi-dataset", "(b,i) statistics of the classification");
    bi_cmd->add_option("--max-b", max_b)->required();
    bi_cmd->add_option("--max-i", max_i)->required();
    bi_cmd->add_option("--max-w2", max_w2)->required();
    auto* cones_opt =
        bi_cmd->add_option("--cones", cones, "fail if any record lies strictly inside a cone up to this index (default 8)")
            ->expected(0, 1);
    bi_cmd->add_option("--csv", csv_path);
    bi_cmd->add_option("--svg", svg_path);
    bi_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

    auto* gcd_cmd = app.add_subcommand("gcd-set", "set of gcd pairs (gcd(a,c), gcd(a,b-c))");
    gcd_cmd->add_option("--a", a)->required();
    gcd_cmd->add_option("--b", b)->required();
    gcd_cmd->add_option("--json", json_path);

    auto* oeis_cmd = app.add_subcommand("oeis", "edge-length and staircase sequences");
    oeis_cmd->add_option("--nmax", nmax)->required();
    oeis_cmd->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (widths_cmd->parsed()) {
        WidthProfile p = width_profile(triangle_from(coords));
        json j;
        j["w1"] = json_int(p.w1);
        j["w2"] = json_int(p.w2);
        j["u1"] = json_dual(p.u1);
        j["u2"] = json_dual(p.u2);
        j["schema"] = "trilab/widths/v1";
        emit_json(j, json_path);
    } else if (canon_cmd->parsed()) {
        NormalForm nf = canonical_form(triangle_from(coords));
        json j = normal_form_json(nf);
        j["schema"] = "trilab/canon/v1";
        emit_json(j, json_path);
    } else if (equiv_cmd->parsed()) {
        auto witness = equivalence_map(triangle_from(coords, 0), triangle_from(coords, 6));
        json j;
        j["equivalent"] = witness.has_value();
        j["map"] = witness ? json_map(*witness) : json(nullptr);
        j["schema"] = "trilab/equiv/v1";
        emit_json(j, json_path);
    } else if (enum_cmd->parsed()) {
        if (!csv_path.empty() || format == "csv") {
            write_text(enumerate_csv(w1, w2), csv_path);
        } else {
            json j;
            j["w1"] = json_int(w1);
            j["w2"] = json_int(w2);
            j["count"] = json_int(class_count(w1, w2));
            json members = json::array();
            for_each_normal_form(w1, w2, [&](const NormalForm& nf) { members.push_back(normal_form_json(nf)); });
            j["triangles"] = std::move(members);
            j["schema"] = "trilab/enumerate/v1";
            emit_json(j, json_path);
        }
    } else if (count_cmd->parsed()) {
        json j;
        j["count"] = json_int(cumulative ? rectangle_class_count(w1, w2) : class_count(w1, w2));
        j["schema"] = "trilab/count/v1";
        emit_json(j, json_path);
    } else if (square_cmd->parsed()) {
        Int count = square_class_count(n);
        json j;
        j["count"] = json_int(count);
        bool agree = true;
        if (check_q) {
            Int q = q_simplex_lattice_points(n);
            j["q_points"] = json_int(q);
            agree = agree && q == count;
        }
        if (check_series) {
            Int s = square_count_series(n).back();
            j["series"] = json_int(s);
            agree = agree && s == count;
        }
        if (check_q || check_series) j["agree"] = agree;
        j["schema"] = "trilab/square-count/v1";
        emit_json(j, json_path);
    } else if (series_cmd->parsed()) {
        SeriesCoeffs s = class_count_series(max_deg);
        json terms = json::array();
        for (Int t = 0; t <= max_deg; ++t)
            for (Int sd = 0; t + sd <= max_deg; ++sd)
                if (s.at(t, sd) != 0) terms.push_back(json::array({t, sd, json_int(s.at(t, sd))}));
        json j;
        j["max_deg"] = json_int(max_deg);
        j["terms"] = std::move(terms);
        j["schema"] = "trilab/series/v1";
        emit_json(j, json_path);
    } else if (aut_cmd->parsed()) {
        Triangle t = triangle_from(coords);
        AutClass g = oracle ? automorphism_group(t) : classify_automorphisms(canonical_form(t));
        json perms = json::array();
        for (int p = 0; p < 6; ++p)
            if (g.realized[static_cast<size_t>(p)]) perms.push_back(detail::permutation_name(p));
        json j;
        j["group"] = aut_name(g.tag);
        j["order"] = g.order();
        j["permutations"] = std::move(perms);
        j["schema"] = "trilab/aut/v1";
        emit_json(j, json_path);
    } else if (ehr_cmd->parsed()) {
        Triangle t = triangle_from(coords);
        BIPoint p = boundary_interior(t);
        EhrhartPolynomial ehr = ehrhart_polynomial(t);
        json j;
        j["b"] = json_int(p.b);
        j["i"] = json_int(p.i);
        j["coeffs"] = json::array({ehr.c2.str(), ehr.c1.str(), ehr.c0.str()});
        if (dilate >= 0) {
            j["dilate"] = json_int(dilate);
            j["value"] = json_int(ehr(dilate));
        }
        j["schema"] = "trilab/ehrhart/v1";
        emit_json(j, json_path);
    } else if (bi_cmd->parsed()) {
        if (thread_cap > 0) threads = std::min(threads, thread_cap);
        auto records = bi_dataset(max_b, max_i, max_w2, threads);
        if (cones_opt->count() > 0 && cones <= 0) cones = 8;
        if (cones > 0) {
            for (const BiRecord& r : records)
                for (Int c = 1; c <= cones; ++c)
                    if (cone_contains(c, BIPoint{r.b, r.i}))
                        throw std::domain_error("record (" + std::to_string(r.b) + "," + std::to_string(r.i) +
                                                ") lies inside cone " + std::to_string(c));
        }
        if (!svg_path.empty()) write_text(bi_dataset_svg(records, max_b, max_i), svg_path);
        write_text(bi_dataset_csv(records), csv_path);
    } else if (gcd_cmd->parsed()) {
        GcdPairSet g = gcd_pair_set(a, b);
        json pairs = json::array();
        for (const auto& [g1, g2] : g.pairs) pairs.push_back(json::array({json_int(g1), json_int(g2)}));
        json j;
        j["a"] = json_int(a);
        j["b"] = json_int(b);
        j["pairs"] = std::move(pairs);
        j["schema"] = "trilab/gcd-set/v1";
        emit_json(j, json_path);
    } else if (oeis_cmd->parsed()) {
        EdgeSequences seqs = edge_sequences(nmax);
        auto to_json = [](const std::vector<Int>& v) {
            json arr = json::array();
            for (Int x : v) arr.push_back(json_int(x));
            return arr;
        };
        json j;
        j["with_edge"] = to_json(seqs.with_edge);
        j["with_edge_positive_volume"] = to_json(seqs.with_edge_positive_volume);
        j["staircase_diffs"] = to_json(seqs.staircase_diffs);
        j["schema"] = "trilab/oeis/v1";
        emit_json(j, json_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "trilab: " << e.what() << "\n";
        return 1;
    }
}
