#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mpirecon/fft.hpp"
#include "mpirecon/forward.hpp"

namespace mpirecon {

/// Half spectrum (length/2 + 1 bins) of one channel.
using Spectrum = std::vector<Complex>;
/// One spectrum per receive channel.
using ChannelSpectra = std::vector<Spectrum>;

/// Per-channel complex transfer function over the half-spectrum bins. Bins
/// whose least-squares denominator fell below the guard are flagged unusable.
struct TransferFunction {
  std::vector<Spectrum> channels;
  std::vector<std::vector<bool>> usable;

  std::size_t bins() const { return channels.empty() ? 0 : channels.front().size(); }
  void validate() const;
};

/// Per-channel SNR per bin plus per-channel thresholds.
struct SnrProfile {
  std::vector<std::vector<double>> snr;
  std::vector<double> thresholds;

  std::size_t bins() const { return snr.empty() ? 0 : snr.front().size(); }
  void validate() const;
};

/// SNR reported for bins whose least-squares residual is exactly zero.
inline constexpr double kSnrCap = 1e12;
/// Relative guard on the least-squares denominator, times the largest bin power.
inline constexpr double kTransferGuard = 1e-12;

/// a_f = sum_j m_jf conj(s_jf) / sum_j |s_jf|^2 per channel and bin.
TransferFunction estimate_transfer_function(const std::vector<ChannelSpectra>& measured,
                                            const std::vector<ChannelSpectra>& simulated);

/// Divides the signal spectrum by the transfer function. Unusable bins are
/// zeroed when `zero_fill` is set and rejected otherwise.
ScanSignal correct_transfer_function(const ScanSignal& signal, const TransferFunction& tf,
                                     bool zero_fill = true);

/// Fitted power over residual power of the per-bin least-squares fit.
SnrProfile compute_snr(const std::vector<ChannelSpectra>& measured,
                       const std::vector<ChannelSpectra>& simulated);

/// Zeroes bins with SNR below the channel threshold, and the DC bin, in place
/// on a half spectrum.
void threshold_spectrum(Spectrum& spectrum, const std::vector<double>& snr, double threshold);

ScanSignal snr_threshold(const ScanSignal& signal, const SnrProfile& profile);

/// Half spectra of every channel of a signal.
ChannelSpectra signal_spectra(const ScanSignal& signal);

/// CSV `bin,channel,re,im`; `usable` is recovered as bins that are present.
TransferFunction read_transfer_function_csv(std::istream& in);
TransferFunction read_transfer_function_csv(const std::string& path);
void write_transfer_function_csv(std::ostream& out, const TransferFunction& tf);

/// CSV `bin,channel,snr`; thresholds are configured separately.
SnrProfile read_snr_csv(std::istream& in);
SnrProfile read_snr_csv(const std::string& path);
void write_snr_csv(std::ostream& out, const SnrProfile& profile);

}  // namespace mpirecon
