#include <stdexcept>

#include "rotkit/rodrigues.hpp"

namespace rotkit {

RotationMatrix::RotationMatrix(const Mat3& m, double tol) : m_(m) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("rotation matrix tolerance must be positive and finite");
    }
    if (!is_finite(m)) {
        throw NonRotationInput("matrix has non-finite entries");
    }
    const double ortho_dev = max_abs_diff(m.transposed() * m, Mat3::identity());
    if (ortho_dev > tol) {
        throw NonRotationInput("matrix is not orthogonal: max |R^T R - I| = " +
                               detail::num_str(ortho_dev));
    }
    const double d = m.det();
    // An improper (reflecting) matrix is rejected no matter how loose tol is;
    // projecting it onto a rotation would silently change the geometry.
    if (!(d > 0.0) || std::abs(d - 1.0) > tol) {
        throw NonRotationInput("matrix determinant " + detail::num_str(d) +
                               " is not 1: improper or scaled input");
    }
}

}  // namespace rotkit
