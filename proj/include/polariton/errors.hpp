#pragma once

#include <stdexcept>
#include <string>

namespace polariton {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidMatrix : Error {
  using Error::Error;
};
struct InvalidSystem : Error {
  using Error::Error;
};
struct IntegrationFailure : Error {
  using Error::Error;
};
struct InvalidModel : Error {
  using Error::Error;
};
struct UnstableHamiltonian : Error {
  using Error::Error;
};
struct DegenerateSpectrum : Error {
  using Error::Error;
};
struct InvalidSelection : Error {
  using Error::Error;
};
struct NotConverged : Error {
  using Error::Error;
};
struct ParityMixing : Error {
  using Error::Error;
};
struct ExpansionBreakdown : Error {
  using Error::Error;
};
struct ConfigNotFound : Error {
  using Error::Error;
};

}  // namespace polariton
