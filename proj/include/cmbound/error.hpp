#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmbound {

/* Base of every error thrown by the library. */
class error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class invalid_argument : public error
{
  public:
    using error::error;
};

/* Input would exceed a configured enumeration or size limit. */
class resource_error : public error
{
  public:
    using error::error;
};

/* A numerical result could not be certified at the available precision. */
class precision_error : public error
{
  public:
    using error::error;
};

/* No admissible parameter point exists for a bound computation. */
class infeasible_error : public error
{
  public:
    using error::error;
};

/* The input curve does not satisfy the non-degeneracy hypothesis
 * (it is a union of coordinate fibers). */
class hypothesis_violation : public error
{
  public:
    using error::error;
};

class parse_error : public error
{
    std::size_t pos_;

  public:
    parse_error(std::string const & msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos))
        , pos_(pos)
    {
    }

    std::size_t position() const noexcept { return pos_; }
};

} // namespace cmbound
