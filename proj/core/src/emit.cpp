#include "bg/emit.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "bg/scan.hpp"

namespace bg {

void tsv_sequence_table(const Tuple4& t, long long n_max, std::ostream& os) {
    os << "n\tA_n\tB_n\tA_diff\tB_diff\n";
    t.ensure(n_max + 1);
    for (long long n = 1; n <= n_max; ++n) {
        os << n << "\t" << t.a(n) << "\t" << t.b(n) << "\t" << t.a(n + 1) - t.a(n) << "\t"
           << t.b(n + 1) - t.b(n) << "\n";
    }
}

void tsv_word_table(ProductWord& w, long long len, std::ostream& os) {
    const Tuple4& t = w.tuple();
    t.ensure(len + 1);
    os << "n";
    for (long long n = 0; n < len; ++n) os << "\t" << n;
    os << "\nA_diff";
    for (long long n = 0; n < len; ++n) os << "\t" << t.a(n + 1) - t.a(n);
    os << "\nB_diff";
    for (long long n = 0; n < len; ++n) os << "\t" << t.b(n + 1) - t.b(n);
    os << "\nletter";
    for (long long n = 0; n < len; ++n) os << "\t" << w.at(n);
    os << "\n";
}

std::string tuple_record(const Tuple4& t, const ValidationReport& rep) {
    std::ostringstream os;
    os << "tuple:\n";
    os << "  alpha: " << t.alpha.str() << "  (~" << t.alpha.decimal(6) << ")\n";
    os << "  beta: " << t.beta.str() << "  (~" << t.beta.decimal(6) << ")\n";
    os << "  gamma: " << t.gamma.str() << "  (~" << t.gamma.decimal(6) << ")\n";
    os << "  delta: " << t.delta.str() << "  (~" << t.delta.decimal(6) << ")\n";
    os << "  B1: " << t.b1 << "\n";
    os << "  floor_beta: " << t.floor_beta << "\n";
    os << "  gamma_sign: " << (t.gamma_sign > 0 ? "positive" : "negative") << "\n";
    if (t.dependence) {
        os << "  dependence: p=" << (*t.dependence)[0] << " q=" << (*t.dependence)[1]
           << " r=" << (*t.dependence)[2] << "\n";
    } else {
        os << "  dependence: none\n";
    }
    os << rep.to_text();
    return os.str();
}

void pbm_grid(const PGrid& g, std::ostream& os) {
    long long n = g.bound();
    os << "P1\n" << n + 1 << " " << n + 1 << "\n";
    for (long long y = n; y >= 0; --y) {
        for (long long x = 0; x <= n; ++x) {
            os << (g.is_p(x, y) ? 1 : 0) << (x == n ? '\n' : ' ');
        }
    }
}

void tsv_grid(const PGrid& g, std::ostream& os) {
    os << "x\ty\tstatus\n";
    for (long long x = 0; x <= g.bound(); ++x) {
        for (long long y = 0; y <= g.bound(); ++y) {
            os << x << "\t" << y << "\t" << (g.is_p(x, y) ? "P" : "N") << "\n";
        }
    }
}

namespace {

double plot_coord(const Real& v) {
    auto [lo, hi] = v.tight_enclosure(40);
    return (lo.get_d() + hi.get_d()) / 2;
}

}  // namespace

void svg_torus(const Tuple4& t, long long steps, std::ostream& os) {
    const double S = 480, margin = 30;
    auto X = [&](double u) { return margin + u * S; };
    auto Y = [&](double v) { return margin + (1 - v) * S; };  // flip: math y up
    double cut_x = plot_coord(Real(1) - t.alpha.frac());
    double cut_y = plot_coord(Real(1) - t.beta.frac());
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << S + 2 * margin << "\" height=\""
       << S + 2 * margin << "\" viewBox=\"0 0 " << S + 2 * margin << " " << S + 2 * margin
       << "\">\n";
    os << "<rect x=\"" << X(0) << "\" y=\"" << Y(1) << "\" width=\"" << S << "\" height=\"" << S
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    // region boundaries at x = 1-{alpha}, y = 1-{beta}
    os << "<line x1=\"" << X(cut_x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(cut_x) << "\" y2=\""
       << Y(1) << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(cut_y) << "\" x2=\"" << X(1) << "\" y2=\""
       << Y(cut_y) << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
    auto region_label = [&](double cx, double cy, const char* name) {
        os << "<text x=\"" << X(cx) << "\" y=\"" << Y(cy)
           << "\" font-size=\"22\" fill=\"gray\" text-anchor=\"middle\">" << name << "</text>\n";
    };
    region_label(cut_x / 2, cut_y / 2, "a");
    region_label(cut_x / 2, (1 + cut_y) / 2, "b");
    region_label((1 + cut_x) / 2, cut_y / 2, "c");
    region_label((1 + cut_x) / 2, (1 + cut_y) / 2, "d");
    // line closure when alpha, beta, 1 are dependent
    if (t.dependence) {
        LineSpec line = line_closure(t.alpha, t.beta, TorusPoint{t.gamma.frac(), t.delta.frac()});
        long long segs = std::abs(line.p) + std::abs(line.q);
        if (segs <= 64) {
            double x0 = plot_coord(line.base.x), y0 = plot_coord(line.base.y);
            double dx = (double)-line.q, dy = (double)line.p;
            double norm = std::max(std::abs(dx), std::abs(dy));
            // draw the geodesic as short chords sampled along t
            int pieces = (int)(segs * 8);
            for (int k = 0; k < pieces; ++k) {
                double t0 = (double)k / pieces, t1 = (double)(k + 1) / pieces;
                double ax = x0 + dx * t0, ay = y0 + dy * t0;
                double bx = x0 + dx * t1, by = y0 + dy * t1;
                ax -= std::floor(ax); ay -= std::floor(ay);
                bx = ax + dx / pieces; by = ay + dy / pieces;
                if (bx < 0 || bx > 1 || by < 0 || by > 1) continue;  // crosses the seam
                os << "<line x1=\"" << X(ax) << "\" y1=\"" << Y(ay) << "\" x2=\"" << X(bx)
                   << "\" y2=\"" << Y(by) << "\" stroke=\"#c8e\" stroke-width=\"1\"/>\n";
            }
            (void)norm;
        }
    }
    // orbit points 0..steps
    RotationScanner sx(t.alpha, t.gamma), sy(t.beta, t.delta);
    for (long long i = 0; i <= steps; ++i) {
        double px = plot_coord(sx.exact_point());
        double py = plot_coord(sy.exact_point());
        os << "<circle cx=\"" << X(px) << "\" cy=\"" << Y(py) << "\" r=\"3\" fill=\"crimson\"/>\n";
        os << "<text x=\"" << X(px) + 5 << "\" y=\"" << Y(py) - 5 << "\" font-size=\"12\">" << i
           << "</text>\n";
        sx.step();
        sy.step();
    }
    os << "</svg>\n";
}

}  // namespace bg
