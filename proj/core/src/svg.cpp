#include "rknot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "rknot/interval.hpp"

namespace rknot {

namespace {

double cheb(int n, double t) {
    return std::cos(n * std::acos(std::clamp(t, -1.0, 1.0)));
}

} // namespace

void render_svg(const Parametrization& p, std::ostream& out) {
    const long long denom = 1LL * p.a * p.b;
    const double pi = std::acos(-1.0);

    // Parameters of the under strand at each crossing.
    auto cps = enumerate_crossings(p.a, p.b);
    std::vector<double> under;
    std::vector<long long> angles;
    for (const CrossingPoint& cp : cps) {
        int dz = certified_sign_diff(p.z, {cp.m_plus, denom}, {cp.m_minus, denom});
        long long m_under = dz > 0 ? cp.m_minus : cp.m_plus;
        under.push_back(std::cos(static_cast<double>(m_under) * pi / static_cast<double>(denom)));
        angles.push_back(cp.m_plus);
        angles.push_back(cp.m_minus);
    }
    std::sort(angles.begin(), angles.end());
    double min_gap = 2.0;
    for (size_t i = 0; i + 1 < angles.size(); ++i) {
        double d = std::abs(std::cos(static_cast<double>(angles[i + 1]) * pi / denom) -
                            std::cos(static_cast<double>(angles[i]) * pi / denom));
        min_gap = std::min(min_gap, d);
    }
    const double gap = 0.35 * min_gap;

    const int width = 640, height = 480, samples = 4000;
    auto px = [&](double x) { return (x + 1.1) / 2.2 * width; };
    auto py = [&](double y) { return (1.1 - y) / 2.2 * height; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";

    bool open = false;
    std::ostringstream path;
    for (int i = 0; i <= samples; ++i) {
        double t = -1.0 + 2.0 * i / samples;
        bool hidden = false;
        for (double u : under)
            if (std::abs(t - u) < gap) hidden = true;
        if (hidden) {
            if (open) {
                out << "<path d=\"" << path.str() << "\"/>\n";
                path.str("");
                open = false;
            }
            continue;
        }
        double x = cheb(p.a, t), y = cheb(p.b, t);
        path << (open ? " L" : "M") << px(x) << " " << py(y);
        open = true;
    }
    if (open) out << "<path d=\"" << path.str() << "\"/>\n";
    out << "</g>\n</svg>\n";
}

std::string render_svg(const Parametrization& p) {
    std::ostringstream ss;
    render_svg(p, ss);
    return ss.str();
}

} // namespace rknot
