#pragma once

#include <stdexcept>
#include <string>

namespace witgen {

// Machine-readable failure codes. The CLI maps these onto exit status:
// oracle_disagreement/internal -> 3, everything else -> 2.
enum class errc {
  order_mismatch,
  not_a_unit,
  shape_mismatch,
  composition_domain,
  bad_ray,
  bad_cone,
  smoothness,
  completeness,
  nongeneric_lambda,
  domain,
  bad_model,
  unsupported,
  conditioning,
  oracle_disagreement,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::order_mismatch: return "order_mismatch";
    case errc::not_a_unit: return "not_a_unit";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::composition_domain: return "composition_domain";
    case errc::bad_ray: return "bad_ray";
    case errc::bad_cone: return "bad_cone";
    case errc::smoothness: return "smoothness";
    case errc::completeness: return "completeness";
    case errc::nongeneric_lambda: return "nongeneric_lambda";
    case errc::domain: return "domain";
    case errc::bad_model: return "bad_model";
    case errc::unsupported: return "unsupported";
    case errc::conditioning: return "conditioning";
    case errc::oracle_disagreement: return "oracle_disagreement";
    case errc::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace witgen
