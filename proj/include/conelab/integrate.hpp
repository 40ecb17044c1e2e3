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

#include <functional>
#include <span>

namespace conelab {

using RealFn = std::function<double(double)>;

/// Integral of f over [a, b] with 0 < a < b, computed in the variable
/// s = log t by adaptive Gauss-Kronrod on each subinterval between the
/// sorted breakpoints that fall inside (a, b).
double integrate_log(const RealFn& f, double a, double b, double rel_tol,
                     std::span<const double> breakpoints = {});

/// Integral of f over [a, inf), summed decade by decade. Throws
/// IntegralDiverges when the decade contributions stop shrinking before the
/// remainder drops below rel_tol of the running total.
double integrate_tail(const RealFn& f, double a, double rel_tol);

} // namespace conelab
