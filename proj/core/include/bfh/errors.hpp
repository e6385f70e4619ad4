#pragma once

#include <stdexcept>
#include <string>

namespace bfh {

// Every failure the library reports derives from Error so callers can catch
// one type. The subclasses exist so tests can check which contract broke.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StructureError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class UnknownGenerator : public Error { using Error::Error; };
class DegenerateInput : public Error { using Error::Error; };
class NonBoundedModule : public Error { using Error::Error; };
class NonTerminating : public Error { using Error::Error; };
class IdempotentMismatch : public Error { using Error::Error; };
class InvalidFraming : public Error { using Error::Error; };
class NotLSpaceKnotForm : public Error { using Error::Error; };
class BadForm : public Error { using Error::Error; };
class NotUnique : public Error { using Error::Error; };
class NotFound : public Error { using Error::Error; };
class NotDistinguished : public Error { using Error::Error; };
class BadMark : public Error { using Error::Error; };
class InvalidInput : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class LocalSystemRequired : public Error { using Error::Error; };

}  // namespace bfh
