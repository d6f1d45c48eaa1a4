#include "fft.hpp"

#include <cstring>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace dunkl_lab::detail {
namespace {

// FFTW planning and plan destruction are not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct AlignedBuffer {
  explicit AlignedBuffer(std::size_t n) : ptr(fftw_alloc_complex(n)) {
    if (ptr == nullptr) throw std::bad_alloc();
  }
  ~AlignedBuffer() { fftw_free(ptr); }
  AlignedBuffer(const AlignedBuffer&) = delete;
  AlignedBuffer& operator=(const AlignedBuffer&) = delete;
  fftw_complex* ptr;
};

}  // namespace

ForwardFft::ForwardFft(std::size_t n) : n_(n), plan_(nullptr) {
  AlignedBuffer scratch(n);
  std::lock_guard lock(planner_mutex());
  plan_ = fftw_plan_dft_1d(static_cast<int>(n), scratch.ptr, scratch.ptr, FFTW_FORWARD,
                           FFTW_ESTIMATE);
  if (plan_ == nullptr) throw std::runtime_error("FFTW failed to build a plan");
}

ForwardFft::~ForwardFft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void ForwardFft::execute(std::span<std::complex<double>> data) const {
  if (data.size() != n_) throw std::invalid_argument("FFT length mismatch");
  AlignedBuffer buffer(n_);
  std::memcpy(buffer.ptr, data.data(), n_ * sizeof(fftw_complex));
  fftw_execute_dft(static_cast<fftw_plan>(plan_), buffer.ptr, buffer.ptr);
  std::memcpy(static_cast<void*>(data.data()), buffer.ptr, n_ * sizeof(fftw_complex));
}

}  // namespace dunkl_lab::detail
