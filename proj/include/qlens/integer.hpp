#ifndef QLENS_INTEGER_HPP
#define QLENS_INTEGER_HPP

#include <cstdint>
#include <type_traits>

#include <boost/multiprecision/traits/is_byte_container.hpp>

// Eigen 3.4 gives every dense expression a const_iterator typedef, which is
// void for non-vectors; boost's byte-container probe then hard-errors.
namespace boost { namespace multiprecision { namespace detail {
template <class C>
    requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : public boost::false_type {};
}}}

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace qlens {

using Integer = boost::multiprecision::cpp_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;

// floor division and non-negative remainder for signed operands
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer mod(const Integer& a, const Integer& m) {
    Integer x = a % m;
    if (x < 0) x += m;
    return x;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t x = a % m;
    return x < 0 ? x + m : x;
}

} // namespace qlens

#endif
