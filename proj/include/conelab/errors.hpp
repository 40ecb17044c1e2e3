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

#include <stdexcept>
#include <string>

namespace conelab {

/// Base class for every error raised by the library.
class ConeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// direction() of an element at (or numerically at) the origin.
class ZeroNorm : public ConeError {
public:
    ZeroNorm() : ConeError("element has zero norm; direction undefined") {}
};

class DimensionMismatch : public ConeError {
public:
    DimensionMismatch(int lhs, int rhs)
        : ConeError("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
    {}
};

/// A declared axiom failed on a sampled witness.
class AxiomViolation : public ConeError {
public:
    AxiomViolation(std::string axiom, std::string witness)
        : ConeError("axiom '" + axiom + "' violated: " + witness),
          axiom_(std::move(axiom)),
          witness_(std::move(witness))
    {}

    const std::string& axiom() const noexcept { return axiom_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

class PredicateUnsupported : public ConeError {
public:
    using ConeError::ConeError;
};

class SpectralNormViolation : public ConeError {
public:
    explicit SpectralNormViolation(double norm)
        : ConeError("spectral sample has norm " + std::to_string(norm) + ", expected 1")
    {}
};

class DegenerateTail : public ConeError {
public:
    using ConeError::ConeError;
};

class IntegralDiverges : public ConeError {
public:
    using ConeError::ConeError;
};

/// A growth condition on the scaling sequence is not met.
class RegimeViolation : public ConeError {
public:
    explicit RegimeViolation(std::string condition)
        : ConeError("regime violation: " + condition), condition_(std::move(condition))
    {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

class NotEmbeddable : public ConeError {
public:
    explicit NotEmbeddable(const std::string& cone)
        : ConeError("cone '" + cone + "' has no additive isometric embedding")
    {}
};

class BudgetTooSmall : public ConeError {
public:
    using ConeError::ConeError;
};

/// Cone/regime combination refused by a theorem runner.
class IncompatibleCone : public ConeError {
public:
    using ConeError::ConeError;
};

class ConfigError : public ConeError {
public:
    using ConeError::ConeError;
};

} // namespace conelab
