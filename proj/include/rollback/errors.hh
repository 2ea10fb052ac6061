/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_ERRORS_HH
#define ROLLBACK_ERRORS_HH

#include <stdexcept>
#include <string>

namespace rollback
{
    /// Base of everything the library throws on purpose.
    class Error : public std::runtime_error
    {
    public:
        explicit Error(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };

    /// Malformed input: bad ids, bad files, inconsistent structures.
    class InvalidInput : public Error
    {
    public:
        using Error::Error;
    };

    /// A stated hypothesis of an operation does not hold. The message names the failing inequality.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    /// An exhaustive enumeration would exceed its configured cap.
    class CapExceeded : public Error
    {
    public:
        using Error::Error;
    };

    /// Best-effort search came up empty. Callers may backtrack.
    class SearchFailure : public Error
    {
    public:
        using Error::Error;
    };

    /// The host did not behave like an s-joined family (no crossing edge, blocker overflow, ...).
    class HostNotJoined : public Error
    {
    public:
        using Error::Error;
    };

    /// Exact mode found no valid candidate although every hypothesis was checked. Indicates a bug
    /// or an uncertified host; never swallowed.
    class InternalInconsistency : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
