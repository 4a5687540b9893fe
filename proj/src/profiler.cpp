// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/profiler.hpp"

#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <exception>
#include <thread>

extern char** environ;

namespace gridprint {

namespace {

std::atomic<pid_t> g_child{0};
std::atomic<bool> g_interrupted{false};

constexpr std::array<int, 3> kForwarded = {SIGINT, SIGTERM, SIGHUP};

extern "C" void forward_signal(int sig) {
  g_interrupted.store(true);
  const pid_t child = g_child.load();
  if (child > 0) ::kill(child, sig);
}

// Installs the forwarding handlers for its lifetime.
class SignalForwarding {
 public:
  SignalForwarding() {
    struct sigaction sa {};
    sa.sa_handler = forward_signal;
    sigemptyset(&sa.sa_mask);
    sa.sa_flags = SA_RESTART;
    for (std::size_t i = 0; i < kForwarded.size(); ++i) {
      ::sigaction(kForwarded[i], &sa, &previous_[i]);
    }
  }
  ~SignalForwarding() {
    for (std::size_t i = 0; i < kForwarded.size(); ++i) {
      ::sigaction(kForwarded[i], &previous_[i], nullptr);
    }
  }
  SignalForwarding(const SignalForwarding&) = delete;
  SignalForwarding& operator=(const SignalForwarding&) = delete;

 private:
  std::array<struct sigaction, kForwarded.size()> previous_{};
};

}  // namespace

int spawn_and_wait(const std::vector<std::string>& argv) {
  if (argv.empty()) throw SpawnFailure("no command given");
  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  g_interrupted.store(false);
  SignalForwarding forwarding;

  pid_t pid = 0;
  const int rc = ::posix_spawnp(&pid, args[0], nullptr, nullptr, args.data(), environ);
  if (rc != 0) {
    throw SpawnFailure("cannot run '" + argv[0] + "': " + std::strerror(rc));
  }
  g_child.store(pid);

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0) {
    if (errno != EINTR) {
      g_child.store(0);
      throw SpawnFailure("waitpid failed: " + std::string(std::strerror(errno)));
    }
  }
  g_child.store(0);
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return 1;
}

bool interrupted_by_signal() {
  return g_interrupted.load();
}

ProfileResult profile(Meter& meter, const MeterConfig& config, const Workload& work,
                      const GpuProbe& gpu) {
  config.validate();
  ProfileResult result;
  const auto baseline = run_sampling_session(meter, config, Phase::Baseline, {}, gpu);

  SamplingResult process;
  double duration_s = 0.0;
  result.started = std::chrono::system_clock::now();
  if (meter.replays()) {
    result.exit_status = work();
    result.finished = std::chrono::system_clock::now();
    process = run_sampling_session(meter, config, Phase::Process, {}, gpu);
    duration_s = process.span().count();
  } else {
    std::exception_ptr sampler_error;
    std::jthread sampler([&](std::stop_token stop) {
      try {
        process = run_sampling_session(meter, config, Phase::Process, stop, gpu);
      } catch (...) {
        sampler_error = std::current_exception();
      }
    });
    const auto t0 = std::chrono::steady_clock::now();
    try {
      result.exit_status = work();
    } catch (...) {
      sampler.request_stop();
      throw;
    }
    duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.finished = std::chrono::system_clock::now();
    sampler.request_stop();
    sampler.join();
    if (sampler_error) {
      try {
        std::rethrow_exception(sampler_error);
      } catch (const std::exception& e) {
        result.error = e.what();
        result.interrupted = interrupted_by_signal();
        return result;
      }
    }
  }
  result.interrupted = interrupted_by_signal();

  try {
    if (!(duration_s > 0.0)) {
      throw EmptyProcessSamples("the measured interval has zero length");
    }
    result.summary = summarize(baseline.samples, process.samples, duration_s, config);
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

}  // namespace gridprint
