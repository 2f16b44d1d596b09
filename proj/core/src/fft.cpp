#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace biham::fft {
namespace {

// Plans are created once per size against scratch buffers with FFTW_UNALIGNED,
// then reused via the new-array execute functions.
struct PlanSet {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  std::vector<double> real_buf;
  std::vector<std::complex<double>> cplx_buf;
  std::vector<std::complex<double>> cplx_buf2;
};

std::mutex g_mutex;
std::map<int, PlanSet>& plan_table() {
  static std::map<int, PlanSet> table;
  return table;
}

PlanSet& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& table = plan_table();
  auto it = table.find(n);
  if (it != table.end()) return it->second;

  PlanSet ps;
  ps.real_buf.resize(n);
  ps.cplx_buf.resize(n);
  ps.cplx_buf2.resize(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  ps.r2c = fftw_plan_dft_r2c_1d(n, ps.real_buf.data(),
                                reinterpret_cast<fftw_complex*>(ps.cplx_buf.data()), flags);
  ps.c2r = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(ps.cplx_buf.data()),
                                ps.real_buf.data(), flags);
  ps.fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(ps.cplx_buf.data()),
                            reinterpret_cast<fftw_complex*>(ps.cplx_buf2.data()),
                            FFTW_FORWARD, flags);
  ps.bwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(ps.cplx_buf.data()),
                            reinterpret_cast<fftw_complex*>(ps.cplx_buf2.data()),
                            FFTW_BACKWARD, flags);
  if (!ps.r2c || !ps.c2r || !ps.fwd || !ps.bwd)
    throw std::runtime_error("fft: FFTW plan creation failed");
  return table.emplace(n, std::move(ps)).first->second;
}

}  // namespace

void forward_r2c(const std::vector<double>& in, std::vector<std::complex<double>>& out) {
  const int n = static_cast<int>(in.size());
  PlanSet& ps = plans_for(n);
  out.resize(n / 2 + 1);
  fftw_execute_dft_r2c(ps.r2c, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse_c2r(const std::vector<std::complex<double>>& in, std::vector<double>& out, int n) {
  if (static_cast<int>(in.size()) != n / 2 + 1)
    throw std::invalid_argument("fft::inverse_c2r: wrong halfcomplex length");
  PlanSet& ps = plans_for(n);
  // c2r destroys its input, so copy first.
  std::vector<std::complex<double>> tmp = in;
  out.resize(n);
  fftw_execute_dft_c2r(ps.c2r, reinterpret_cast<fftw_complex*>(tmp.data()), out.data());
  const double inv = 1.0 / n;
  for (double& v : out) v *= inv;
}

void forward_c2c(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) {
  const int n = static_cast<int>(in.size());
  PlanSet& ps = plans_for(n);
  out.resize(n);
  fftw_execute_dft(ps.fwd,
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse_c2c(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) {
  const int n = static_cast<int>(in.size());
  PlanSet& ps = plans_for(n);
  out.resize(n);
  fftw_execute_dft(ps.bwd,
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double inv = 1.0 / n;
  for (auto& v : out) v *= inv;
}

}  // namespace biham::fft
