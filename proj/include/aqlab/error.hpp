#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqlab {

enum class errc {
  signature_mismatch,
  isotropic_scalar,
  not_purely_imaginary,
  degenerate_eigenvector,
  orthonormality_violated,
  not_aq_structure,
  zero_vector,
  not_semisimple,
  degenerate_inner,
  invalid_algebra,
  invalid_model,
  not_twistor,
  not_eigenvalue,
  invalid_mu,
  wrong_signature,
  degenerate_metric,
  not_elliptic,
  bad_input,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::isotropic_scalar: return "IsotropicScalar";
    case errc::not_purely_imaginary: return "NotPurelyImaginary";
    case errc::degenerate_eigenvector: return "DegenerateEigenvector";
    case errc::orthonormality_violated: return "OrthonormalityViolated";
    case errc::not_aq_structure: return "NotAQStructure";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::degenerate_inner: return "DegenerateInner";
    case errc::invalid_algebra: return "InvalidAlgebra";
    case errc::invalid_model: return "InvalidModel";
    case errc::not_twistor: return "NotTwistor";
    case errc::not_eigenvalue: return "NotEigenvalue";
    case errc::invalid_mu: return "InvalidMu";
    case errc::wrong_signature: return "WrongSignature";
    case errc::degenerate_metric: return "Degenerate";
    case errc::not_elliptic: return "NotElliptic";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported through this type;
/// code() identifies which contract was violated.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace aqlab
