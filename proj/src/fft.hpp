#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace dunkl_lab::detail {

/// Forward complex DFT of fixed length, X_m = sum_j x_j exp(-2 pi i m j / n).
/// The plan is immutable once built; execute() allocates its own aligned
/// buffers, so concurrent calls on one instance are safe.
class ForwardFft {
 public:
  explicit ForwardFft(std::size_t n);
  ~ForwardFft();
  ForwardFft(const ForwardFft&) = delete;
  ForwardFft& operator=(const ForwardFft&) = delete;

  std::size_t size() const noexcept { return n_; }
  /// Transforms `data` in place; data.size() must equal size().
  void execute(std::span<std::complex<double>> data) const;

 private:
  std::size_t n_;
  void* plan_;
};

}  // namespace dunkl_lab::detail
