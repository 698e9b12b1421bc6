#ifndef GCELL_ERRORS_HH
#define GCELL_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcell
{
    /// A vertex or set argument lies outside the universe an operation works over.
    class DomainError : public std::domain_error
    {
        public:
            using std::domain_error::domain_error;
    };

    /// A level index or depth outside the materialized range.
    class RangeError : public std::out_of_range
    {
        public:
            using std::out_of_range::out_of_range;
    };

    /// Invalid construction parameters (odd grid, i <= j, ...).
    class ParameterError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Caller violated an operation's usage contract (depth mismatch, related inputs, ...).
    class UsageError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An enumeration or search ran past its budget.
    class ResourceError : public std::runtime_error
    {
        public:
            ResourceError(const std::string & what, std::size_t reached) :
                std::runtime_error(what),
                _reached(reached)
            {
            }

            auto reached() const -> std::size_t { return _reached; }

        private:
            std::size_t _reached;
    };

    /// A structural precondition does not hold; the message carries a witness.
    class PreconditionError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    /// A construction that should always succeed did not; the message names the failing step.
    class CertificateFailure : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, int line, int column) :
                std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
                _message(message),
                _line(line),
                _column(column)
            {
            }

            auto message() const -> const std::string & { return _message; }
            auto line() const -> int { return _line; }
            auto column() const -> int { return _column; }

        private:
            std::string _message;
            int _line, _column;
    };
}

#endif
