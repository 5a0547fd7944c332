#include "inpaint/hdmr.hpp"

#include <cmath>
#include <stdexcept>

#include "inpaint/cubic.hpp"

namespace inpaint {

namespace {

struct Components {
    double f0 = 0.0;
    std::vector<double> f_row, f_col;
    std::vector<std::uint8_t> row_has_data, col_has_data;
};

Components component_means(const Plane& p, const PixelMask& m) {
    Components c;
    c.f_row.assign(p.height, 0.0);
    c.f_col.assign(p.width, 0.0);
    c.row_has_data.assign(p.height, 0);
    c.col_has_data.assign(p.width, 0);
    double sum = 0.0;
    std::size_t count = 0;
    std::vector<double> row_sum(p.height, 0.0), col_sum(p.width, 0.0);
    std::vector<std::size_t> row_cnt(p.height, 0), col_cnt(p.width, 0);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x) {
            if (m.at(x, y)) continue;
            const double v = p.at(x, y);
            sum += v;
            ++count;
            row_sum[y] += v;
            ++row_cnt[y];
            col_sum[x] += v;
            ++col_cnt[x];
        }
    if (count == 0)
        throw std::invalid_argument("hdmr: no known pixels");
    c.f0 = sum / static_cast<double>(count);
    for (int y = 0; y < p.height; ++y)
        if (row_cnt[y] > 0) {
            c.f_row[y] = row_sum[y] / static_cast<double>(row_cnt[y]) - c.f0;
            c.row_has_data[y] = 1;
        }
    for (int x = 0; x < p.width; ++x)
        if (col_cnt[x] > 0) {
            c.f_col[x] = col_sum[x] / static_cast<double>(col_cnt[x]) - c.f0;
            c.col_has_data[x] = 1;
        }
    return c;
}

}  // namespace

std::vector<double> spline_fill(const std::vector<double>& values,
                                const std::vector<std::uint8_t>& has_value) {
    const int n = static_cast<int>(values.size());
    std::vector<int> knot_idx;
    for (int i = 0; i < n; ++i)
        if (has_value[i]) knot_idx.push_back(i);
    std::vector<double> out = values;
    const int k = static_cast<int>(knot_idx.size());
    if (k == 0) throw std::invalid_argument("spline_fill: no known entries");
    if (k == 1) {
        for (int i = 0; i < n; ++i)
            if (!has_value[i]) out[i] = values[knot_idx[0]];
        return out;
    }
    // Natural cubic spline second derivatives via the Thomas algorithm.
    std::vector<double> xs(k), ys(k);
    for (int i = 0; i < k; ++i) {
        xs[i] = knot_idx[i];
        ys[i] = values[knot_idx[i]];
    }
    std::vector<double> m2(k, 0.0);
    if (k > 2) {
        std::vector<double> diag(k - 2), rhs(k - 2), upper(k - 2);
        for (int i = 1; i < k - 1; ++i) {
            const double h0 = xs[i] - xs[i - 1], h1 = xs[i + 1] - xs[i];
            diag[i - 1] = 2.0 * (h0 + h1);
            upper[i - 1] = h1;
            rhs[i - 1] = 6.0 * ((ys[i + 1] - ys[i]) / h1 -
                                (ys[i] - ys[i - 1]) / h0);
        }
        for (int i = 1; i < k - 2; ++i) {
            const double h0 = xs[i + 1] - xs[i];  // sub-diagonal entry
            const double f = h0 / diag[i - 1];
            diag[i] -= f * upper[i - 1];
            rhs[i] -= f * rhs[i - 1];
        }
        for (int i = k - 3; i >= 0; --i) {
            double v = rhs[i];
            if (i + 1 < k - 2) v -= upper[i] * m2[i + 2];
            m2[i + 1] = v / diag[i];
        }
    }
    auto eval = [&](double t) {
        if (t <= xs[0]) {
            // Linear extension with the end slope (natural end: m2 = 0).
            const double h = xs[1] - xs[0];
            const double slope = (ys[1] - ys[0]) / h - h / 6.0 * m2[1];
            return ys[0] + slope * (t - xs[0]);
        }
        if (t >= xs[k - 1]) {
            const double h = xs[k - 1] - xs[k - 2];
            const double slope = (ys[k - 1] - ys[k - 2]) / h + h / 6.0 * m2[k - 2];
            return ys[k - 1] + slope * (t - xs[k - 1]);
        }
        int seg = 0;
        int lo = 0, hi = k - 1;
        while (hi - lo > 1) {
            const int mid = (lo + hi) / 2;
            if (xs[mid] <= t) lo = mid; else hi = mid;
        }
        seg = lo;
        const double h = xs[seg + 1] - xs[seg];
        const double a = (xs[seg + 1] - t) / h, b2 = (t - xs[seg]) / h;
        return a * ys[seg] + b2 * ys[seg + 1] +
               ((a * a * a - a) * m2[seg] + (b2 * b2 * b2 - b2) * m2[seg + 1]) *
                   h * h / 6.0;
    };
    for (int i = 0; i < n; ++i)
        if (!has_value[i]) out[i] = eval(i);
    return out;
}

HdmrExpansion hdmr_decompose(const Plane& p, const PixelMask& m) {
    if (p.width != m.width || p.height != m.height)
        throw std::invalid_argument("hdmr_decompose: plane/mask mismatch");
    const Components c = component_means(p, m);
    for (int y = 0; y < p.height; ++y)
        if (!c.row_has_data[y])
            throw std::invalid_argument("hdmr_decompose: fully-unknown row");
    for (int x = 0; x < p.width; ++x)
        if (!c.col_has_data[x])
            throw std::invalid_argument("hdmr_decompose: fully-unknown column");
    HdmrExpansion e;
    e.f0 = c.f0;
    e.f_row = c.f_row;
    e.f_col = c.f_col;
    e.row_has_data = c.row_has_data;
    e.col_has_data = c.col_has_data;
    e.f_xn.assign(p.height, 0.0);
    e.f_yn.assign(p.width, 0.0);
    e.f_xy = Plane(p.width, p.height, 0.0);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x)
            if (!m.at(x, y))
                e.f_xy.at(x, y) = p.at(x, y) - e.f0 - e.f_row[y] - e.f_col[x];
    return e;
}

Plane hdmr_inpaint(const Plane& p, const PixelMask& m) {
    if (p.width != m.width || p.height != m.height)
        throw std::invalid_argument("hdmr_inpaint: plane/mask mismatch");
    if (m.count_unknown() == 0) return p;
    const Components c = component_means(p, m);
    const std::vector<double> f_row = spline_fill(c.f_row, c.row_has_data);
    const std::vector<double> f_col = spline_fill(c.f_col, c.col_has_data);

    // Residual at known cells; the scattered cubic routine fills the rest.
    Plane resid(p.width, p.height, 0.0);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x)
            if (!m.at(x, y))
                resid.at(x, y) = p.at(x, y) - c.f0 - f_row[y] - f_col[x];
    const Plane resid_full = cubic_inpaint(resid, m);

    Plane out = p;
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x)
            if (m.at(x, y))
                out.at(x, y) = c.f0 + f_row[y] + f_col[x] + resid_full.at(x, y);
    return out;
}

Image hdmr_inpaint_colour(const Image& img, const PixelMask& m) {
    const auto planes = split_channels(img);
    std::vector<Plane> filled;
    filled.reserve(planes.size());
    for (const auto& p : planes) filled.push_back(hdmr_inpaint(p, m));
    return merge_channels(filled);
}

}  // namespace inpaint
