#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

// Root of every error the library throws. Sweeps catch this and record a flag
// instead of aborting.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// phi = 0: the composed transformation is the identity and theta is undefined.
class DegeneratePhaseError : public Error {
 public:
  using Error::Error;
};

class NoSolutionError : public Error {
 public:
  NoSolutionError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, int iterations) : Error(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

class NoEngineRegimeError : public Error {
 public:
  using Error::Error;
};

class NotAnEngineError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double leakage) : Error(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class IdentityViolationError : public Error {
 public:
  IdentityViolationError(const std::string& what, double defect) : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

class ImaginaryCouplingError : public Error {
 public:
  ImaginaryCouplingError(const std::string& what, double im_coupling)
      : Error(what), im_coupling_(im_coupling) {}
  double im_coupling() const { return im_coupling_; }

 private:
  double im_coupling_;
};

class NoCrossingError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace su11
