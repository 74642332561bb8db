#ifndef LATTICE2D_ERROR_HPP
#define LATTICE2D_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lat2d {

enum class Errc {
  DegenerateBasis,
  NonTermination,
  NotObtuse,
  OutsideObt,
  InvalidInvariant,
  UnsupportedQ,
  InvalidPI,
  InconsistentSign,
  InsufficientLength,
  InconsistentRSD,
  InvalidParams,
  DegeneratePath,
  ParseError,
};

const char* errc_name(Errc code);

// Input-side failures map to exit code 1, numeric failures to 2.
bool is_numeric_failure(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lat2d

#endif  // LATTICE2D_ERROR_HPP
