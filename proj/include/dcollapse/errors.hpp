#pragma once

#include <stdexcept>
#include <string>

namespace dcollapse {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad face, unparsable file, invalid formula.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A query was made outside its domain (face not in complex, bad d, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An elementary collapse was requested on a face that is not d-collapsible.
class CollapseError : public Error {
 public:
  using Error::Error;
};

/// A face pairing would merge two vertices of one face.
class GluingError : public Error {
 public:
  using Error::Error;
};

/// A gadget construction violated one of its structural invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A scripted collapse could not be produced because a side condition failed.
class ScriptError : public Error {
 public:
  using Error::Error;
};

/// A brute-force procedure was asked to exceed its size limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcollapse
