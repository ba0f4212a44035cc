#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace conformal_heat::detail {

namespace {

// The FFTW planner is not reentrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftPlan {
public:
  FftPlan(std::vector<std::complex<double>>& buffer, int sign) {
    auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(buffer.size()), data, data,
                             sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;
  ~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }

  void execute() const { fftw_execute(plan_); }

private:
  fftw_plan plan_;
};

} // namespace

void dft_in_place(std::vector<std::complex<double>>& buffer, int sign) {
  FftPlan plan(buffer, sign);
  plan.execute();
}

} // namespace conformal_heat::detail
