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

#pragma once

// Randomized checks of the cone laws. Every check is evaluated on sampled
// (x, y, h, a, b) tuples; the sampler's fixed cases come first so that
// known counterexamples are always reported verbatim.

#include "conelab/cone.hpp"
#include "conelab/rng.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace conelab {

struct AxiomResult {
    std::string name;
    bool declared = false;  // failure is a hard error only when declared
    bool passed = true;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string counterexample;
};

struct AxiomReport {
    std::string cone;
    std::uint64_t trials = 0;
    double tol = 0.0;
    std::vector<AxiomResult> results;

    bool declared_ok() const
    {
        for (const auto& r : results) {
            if (r.declared && !r.passed) {
                return false;
            }
        }
        return true;
    }

    const AxiomResult* find(const std::string& name) const
    {
        for (const auto& r : results) {
            if (r.name == name) {
                return &r;
            }
        }
        return nullptr;
    }
};

template <class E>
struct AxiomCase {
    E x;
    E y;
    E h;
    double a = 1.0;
    double b = 1.0;
};

template <class E>
struct AxiomSampler {
    std::function<E(CounterRng&)> element;
    std::function<double(CounterRng&)> scalar;
    std::vector<AxiomCase<E>> fixed;
};

/// Throws AxiomViolation for the first declared axiom that failed.
inline void require_declared(const AxiomReport& report)
{
    for (const auto& r : report.results) {
        if (r.declared && !r.passed) {
            throw AxiomViolation(r.name, r.counterexample);
        }
    }
}

namespace detail {

inline std::string num(double v)
{
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

} // namespace detail

template <ConeStructure C>
AxiomReport axiom_suite(const C& cone, const AxiomSampler<element_t<C>>& sampler, std::uint64_t trials,
                        double tol, std::uint64_t seed = 0)
{
    using E = element_t<C>;
    const ConeFlags flags = cone.flags();

    AxiomReport report;
    report.cone = cone.name();
    report.trials = trials;
    report.tol = tol;
    report.results.reserve(12);
    auto add = [&](std::string name, bool declared) -> AxiomResult& {
        AxiomResult r;
        r.name = std::move(name);
        r.declared = declared;
        report.results.push_back(std::move(r));
        return report.results.back();
    };
    auto& metric = add("metric", true);
    auto& homogeneity = add("homogeneity", true);
    auto& first_dist = add("first_distributivity", true);
    auto& commutativity = add("commutativity", true);
    auto& associativity = add("associativity", true);
    auto& action = add("scaling_action", true);
    auto& neutral = add("neutral_element", false);
    auto& pointed = add("pointedness", flags.pointed);
    auto& sub_inv = add("sub_invariance", flags.sub_invariant);
    auto& subadd = add("norm_subadditivity", flags.sub_invariant);
    auto& inv = add("invariance", flags.invariant);
    auto& second_dist = add("second_distributivity", flags.second_distributive);

    auto record = [](AxiomResult& r, bool ok, auto&& witness) {
        ++r.checks;
        if (!ok) {
            ++r.failures;
            if (r.passed) {
                r.passed = false;
                r.counterexample = witness();
            }
        }
    };
    auto d = [&](const E& p, const E& q) { return cone.distance(p, q); };
    auto nrm = [&](const E& p) { return norm(cone, p); };
    auto show = [&](const E& p) { return cone.describe(p); };
    using detail::num;

    const E zero = cone.origin();
    const E e = cone.neutral();

    auto check = [&](const AxiomCase<E>& c) {
        const E& x = c.x;
        const E& y = c.y;
        const E& h = c.h;
        const double a = c.a;
        const double b = c.b;
        const double nx = nrm(x);
        const double ny = nrm(y);
        const double nh = nrm(h);
        const double dxy = d(x, y);
        const double dyx = d(y, x);
        const double dyh = d(y, h);
        const double dxh = d(x, h);
        const double dxx = d(x, x);

        {
            const double slack = tol * (1.0 + dxy + dyh);
            const bool ok = dxy >= 0.0 && dxx <= tol * (1.0 + nx) && std::abs(dxy - dyx) <= tol * (1.0 + dxy) &&
                            dxh <= dxy + dyh + slack;
            record(metric, ok, [&] {
                return "x=" + show(x) + ", y=" + show(y) + ", z=" + show(h) + ": d(x,x)=" + num(dxx) +
                       ", d(x,y)=" + num(dxy) + ", d(y,x)=" + num(dyx) + ", d(x,z)=" + num(dxh) +
                       ", d(x,y)+d(y,z)=" + num(dxy + dyh);
            });
        }
        {
            const double lhs = d(cone.scale(a, x), cone.scale(a, y));
            record(homogeneity, std::abs(lhs - a * dxy) <= tol * (1.0 + a * dxy), [&] {
                return "a=" + num(a) + ", x=" + show(x) + ", y=" + show(y) + ": d(ax,ay)=" + num(lhs) +
                       ", a*d(x,y)=" + num(a * dxy);
            });
        }
        {
            const E lhs = cone.scale(a, cone.add(x, y));
            const E rhs = cone.add(cone.scale(a, x), cone.scale(a, y));
            const double gap = d(lhs, rhs);
            record(first_dist, gap <= tol * (1.0 + a * (nx + ny)), [&] {
                return "a=" + num(a) + ", x=" + show(x) + ", y=" + show(y) + ": a(x+y)=" + show(lhs) +
                       ", ax+ay=" + show(rhs);
            });
        }
        {
            const E xy = cone.add(x, y);
            const E yx = cone.add(y, x);
            record(commutativity, d(xy, yx) <= tol * (1.0 + nx + ny), [&] {
                return "x=" + show(x) + ", y=" + show(y) + ": x+y=" + show(xy) + ", y+x=" + show(yx);
            });
            const E l = cone.add(xy, h);
            const E r = cone.add(x, cone.add(y, h));
            record(associativity, d(l, r) <= tol * (1.0 + nx + ny + nh), [&] {
                return "x=" + show(x) + ", y=" + show(y) + ", z=" + show(h) + ": (x+y)+z=" + show(l) +
                       ", x+(y+z)=" + show(r);
            });
        }
        {
            const E l = cone.scale(a, cone.scale(b, x));
            const E r = cone.scale(a * b, x);
            record(action, d(l, r) <= tol * (1.0 + a * b * nx), [&] {
                return "a=" + num(a) + ", b=" + num(b) + ", x=" + show(x) + ": a(bx)=" + show(l) +
                       ", (ab)x=" + show(r);
            });
        }
        {
            const E xe = cone.add(x, e);
            record(neutral, d(xe, x) <= tol * (1.0 + nx), [&] {
                return "x=" + show(x) + ", e=" + show(e) + ": x+e=" + show(xe);
            });
        }
        if (nx > kZeroNormThreshold) {
            const double tiny = d(cone.scale(std::ldexp(1.0, -20), x), zero);
            record(pointed, tiny < 1e-6 * nx, [&] {
                return "x=" + show(x) + ": d(2^-20 x, 0)=" + num(tiny) + ", |x|=" + num(nx);
            });
        }
        {
            const E xh = cone.add(x, h);
            const double lhs = d(xh, x);
            record(sub_inv, lhs <= nh + tol * (1.0 + nh), [&] {
                return "x=" + show(x) + ", h=" + show(h) + ": d(x+h,x)=" + num(lhs) + " > |h|=" + num(nh);
            });
            const double nxy = nrm(cone.add(x, y));
            record(subadd, nxy <= nx + ny + tol * (1.0 + nx + ny), [&] {
                return "x=" + show(x) + ", y=" + show(y) + ": |x+y|=" + num(nxy) + " > |x|+|y|=" + num(nx + ny);
            });
        }
        {
            const double lhs = d(cone.add(x, h), cone.add(y, h));
            record(inv, std::abs(lhs - dxy) <= tol * (1.0 + dxy + nh), [&] {
                return "x=" + show(x) + ", y=" + show(y) + ", h=" + show(h) + ": d(x+h,y+h)=" + num(lhs) +
                       ", d(x,y)=" + num(dxy);
            });
        }
        {
            const E l = cone.scale(a + b, x);
            const E r = cone.add(cone.scale(a, x), cone.scale(b, x));
            record(second_dist, d(l, r) <= tol * (1.0 + (a + b) * nx), [&] {
                return "a=" + num(a) + ", b=" + num(b) + ", x=" + show(x) + ": (a+b)x=" + show(l) +
                       ", ax+bx=" + show(r);
            });
        }
    };

    for (const auto& c : sampler.fixed) {
        check(c);
    }
    for (std::uint64_t i = 0; i < trials; ++i) {
        CounterRng rng(seed, Stream::axioms, 0, i);
        AxiomCase<E> c{sampler.element(rng), sampler.element(rng), sampler.element(rng), sampler.scalar(rng),
                       sampler.scalar(rng)};
        check(c);
    }
    return report;
}

} // namespace conelab
