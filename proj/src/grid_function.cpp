/*
   Copyright 2026 The conelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "conelab/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace conelab {

namespace {

// int_{x0}^{x0+h} x g(x)^2 dx for g linear from g0 to g1.
double segment_weighted_square(double x0, double h, double g0, double g1)
{
    return h * (x0 * (g0 * g0 + g0 * g1 + g1 * g1) / 3.0
                + h * (g0 * g0 + 2.0 * g0 * g1 + 3.0 * g1 * g1) / 12.0);
}

// int_{x0}^{x0+h} x f(x) g(x) dx for linear f, g.
double segment_weighted_product(double x0, double h, double f0, double f1, double g0, double g1)
{
    return h * (x0 * (2.0 * f0 * g0 + f0 * g1 + f1 * g0 + 2.0 * f1 * g1) / 6.0
                + h * (f0 * g0 + f0 * g1 + f1 * g0 + 3.0 * f1 * g1) / 12.0);
}

// Value at x of the piecewise-linear function, where `next` is the index of
// the first knot strictly greater than x.
double interpolate(std::span<const double> k, std::span<const double> v, std::size_t next, double x)
{
    if (next >= k.size()) {
        return 0.0;
    }
    const double t = (x - k[next - 1]) / (k[next] - k[next - 1]);
    return v[next - 1] + (v[next] - v[next - 1]) * t;
}

// Calls visit(x, f(x), g(x)) on the sorted union of both knot sets.
template <class Visit>
void merged_walk(const GridFunction& f, const GridFunction& g, Visit&& visit)
{
    const auto fk = f.knots();
    const auto fv = f.values();
    const auto gk = g.knots();
    const auto gv = g.values();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fk.size() || j < gk.size()) {
        double x;
        if (j == gk.size() || (i < fk.size() && fk[i] <= gk[j])) {
            x = fk[i];
        } else {
            x = gk[j];
        }
        double fx;
        double gx;
        if (i < fk.size() && fk[i] == x) {
            fx = fv[i++];
        } else {
            fx = interpolate(fk, fv, i, x);
        }
        if (j < gk.size() && gk[j] == x) {
            gx = gv[j++];
        } else {
            gx = interpolate(gk, gv, j, x);
        }
        visit(x, fx, gx);
    }
}

struct SlopeEvent {
    double at;
    double delta;
};

// Decomposes sum(fs) into value and slope at 0 plus sorted slope changes.
void slope_events(std::span<const GridFunction> fs, double& v0, double& s0, std::vector<SlopeEvent>& events)
{
    v0 = 0.0;
    s0 = 0.0;
    events.clear();
    for (const auto& f : fs) {
        const auto k = f.knots();
        const auto v = f.values();
        if (k.size() < 2) {
            continue;
        }
        v0 += v[0];
        double prev = (v[1] - v[0]) / (k[1] - k[0]);
        s0 += prev;
        for (std::size_t j = 1; j < k.size(); ++j) {
            const double next = j + 1 < k.size() ? (v[j + 1] - v[j]) / (k[j + 1] - k[j]) : 0.0;
            events.push_back({k[j], next - prev});
            prev = next;
        }
    }
    std::sort(events.begin(), events.end(),
              [](const SlopeEvent& a, const SlopeEvent& b) { return a.at < b.at; });
}

void trim_trailing_zeros(std::vector<double>& knots, std::vector<double>& values)
{
    std::size_t last_nonzero = values.size();
    for (std::size_t i = values.size(); i-- > 0;) {
        if (values[i] != 0.0) {
            last_nonzero = i;
            break;
        }
    }
    if (last_nonzero == values.size()) {
        knots.assign(1, 0.0);
        values.assign(1, 0.0);
        return;
    }
    knots.resize(last_nonzero + 2);
    values.resize(last_nonzero + 2);
}

} // namespace

GridFunction::GridFunction() : knots_{0.0}, values_{0.0} {}

GridFunction::GridFunction(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values))
{
    if (knots_.empty() || knots_.size() != values_.size()) {
        throw std::invalid_argument("grid function needs matching, nonempty knot and value lists");
    }
    if (knots_.front() != 0.0) {
        throw std::invalid_argument("grid function knots must start at 0");
    }
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i]) || !std::isfinite(values_[i])) {
            throw std::invalid_argument("grid function entries must be finite");
        }
        if (i > 0 && !(knots_[i] > knots_[i - 1])) {
            throw std::invalid_argument("grid function knots must increase strictly");
        }
    }
    if (values_.back() != 0.0) {
        throw std::invalid_argument("grid function must vanish at its last knot");
    }
}

GridFunction GridFunction::hat(double peak, double height)
{
    if (!(peak > 0.0)) {
        throw std::invalid_argument("hat peak must be positive");
    }
    return GridFunction({0.0, peak, 2.0 * peak}, {0.0, height, 0.0});
}

bool GridFunction::is_zero() const noexcept
{
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double GridFunction::operator()(double x) const
{
    if (x < 0.0 || x > knots_.back()) {
        return 0.0;
    }
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    const auto next = static_cast<std::size_t>(it - knots_.begin());
    if (next == knots_.size()) {
        return values_.back();
    }
    return interpolate(knots_, values_, next, x);
}

GridFunction GridFunction::stretched(double a) const
{
    if (!(a > 0.0)) {
        throw std::invalid_argument("cone scaling requires a positive factor");
    }
    std::vector<double> k(knots_);
    for (auto& x : k) {
        x *= a;
    }
    return GridFunction(Trusted{}, std::move(k), values_);
}

GridFunction GridFunction::times(double c) const
{
    std::vector<double> v(values_);
    for (auto& y : v) {
        y *= c;
    }
    return GridFunction(Trusted{}, knots_, std::move(v));
}

GridFunction operator+(const GridFunction& f, const GridFunction& g)
{
    std::vector<double> k;
    std::vector<double> v;
    k.reserve(f.size() + g.size());
    v.reserve(f.size() + g.size());
    merged_walk(f, g, [&](double x, double fx, double gx) {
        k.push_back(x);
        v.push_back(fx + gx);
    });
    trim_trailing_zeros(k, v);
    return GridFunction(GridFunction::Trusted{}, std::move(k), std::move(v));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g)
{
    std::vector<double> k;
    std::vector<double> v;
    k.reserve(f.size() + g.size());
    v.reserve(f.size() + g.size());
    merged_walk(f, g, [&](double x, double fx, double gx) {
        k.push_back(x);
        v.push_back(fx - gx);
    });
    trim_trailing_zeros(k, v);
    return GridFunction(GridFunction::Trusted{}, std::move(k), std::move(v));
}

GridFunction GridFunction::sum(std::span<const GridFunction> fs)
{
    double v0 = 0.0;
    double slope = 0.0;
    std::vector<SlopeEvent> events;
    slope_events(fs, v0, slope, events);
    std::vector<double> k{0.0};
    std::vector<double> v{v0};
    double x = 0.0;
    double val = v0;
    for (std::size_t i = 0; i < events.size();) {
        const double t = events[i].at;
        val += slope * (t - x);
        x = t;
        while (i < events.size() && events[i].at == t) {
            slope += events[i].delta;
            ++i;
        }
        if (t == 0.0) {
            continue;
        }
        k.push_back(t);
        v.push_back(val);
    }
    // All summands vanish beyond their last knot.
    v.back() = 0.0;
    trim_trailing_zeros(k, v);
    return GridFunction(Trusted{}, std::move(k), std::move(v));
}

void GridFunction::accumulate_sum_on(std::span<const GridFunction> fs,
                                     std::span<const double> at,
                                     std::span<double> out)
{
    if (at.size() != out.size()) {
        throw std::invalid_argument("accumulate_sum_on: size mismatch");
    }
    double v0 = 0.0;
    double slope = 0.0;
    std::vector<SlopeEvent> events;
    slope_events(fs, v0, slope, events);
    double x = 0.0;
    double val = v0;
    std::size_t e = 0;
    for (std::size_t i = 0; i < at.size(); ++i) {
        const double target = at[i];
        while (e < events.size() && events[e].at <= target) {
            val += slope * (events[e].at - x);
            x = events[e].at;
            slope += events[e].delta;
            ++e;
        }
        if (e == events.size()) {
            // Past every knot: all summands are zero here.
            break;
        }
        out[i] += val + slope * (target - x);
    }
}

std::string GridFunction::describe() const
{
    std::ostringstream os;
    os.precision(6);
    os << "f{";
    const std::size_t shown = std::min<std::size_t>(knots_.size(), 6);
    for (std::size_t i = 0; i < shown; ++i) {
        os << (i ? ", " : "") << '(' << knots_[i] << ", " << values_[i] << ')';
    }
    if (shown < knots_.size()) {
        os << ", ... " << knots_.size() << " knots";
    }
    os << '}';
    return os.str();
}

double weighted_norm(const GridFunction& f)
{
    const auto k = f.knots();
    const auto v = f.values();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        acc += segment_weighted_square(k[i], k[i + 1] - k[i], v[i], v[i + 1]);
    }
    return std::sqrt(acc);
}

double weighted_inner(const GridFunction& f, const GridFunction& g)
{
    double acc = 0.0;
    bool first = true;
    double px = 0.0;
    double pf = 0.0;
    double pg = 0.0;
    merged_walk(f, g, [&](double x, double fx, double gx) {
        if (!first) {
            acc += segment_weighted_product(px, x - px, pf, fx, pg, gx);
        }
        first = false;
        px = x;
        pf = fx;
        pg = gx;
    });
    return acc;
}

double weighted_distance(const GridFunction& f, const GridFunction& g)
{
    double acc = 0.0;
    bool first = true;
    double px = 0.0;
    double pd = 0.0;
    merged_walk(f, g, [&](double x, double fx, double gx) {
        const double d = fx - gx;
        if (!first) {
            acc += segment_weighted_square(px, x - px, pd, d);
        }
        first = false;
        px = x;
        pd = d;
    });
    return std::sqrt(acc);
}

} // namespace conelab
