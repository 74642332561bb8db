#include "lattice2d/error.hpp"

namespace lat2d {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DegenerateBasis: return "DegenerateBasis";
    case Errc::NonTermination: return "NonTermination";
    case Errc::NotObtuse: return "NotObtuse";
    case Errc::OutsideObt: return "OutsideObt";
    case Errc::InvalidInvariant: return "InvalidInvariant";
    case Errc::UnsupportedQ: return "UnsupportedQ";
    case Errc::InvalidPI: return "InvalidPI";
    case Errc::InconsistentSign: return "InconsistentSign";
    case Errc::InsufficientLength: return "InsufficientLength";
    case Errc::InconsistentRSD: return "InconsistentRSD";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::DegeneratePath: return "DegeneratePath";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_numeric_failure(Errc code) {
  return code == Errc::NonTermination;
}

}  // namespace lat2d
