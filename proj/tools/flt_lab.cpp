#include <csignal>
#include <iostream>

#include "fltlab/cli.hpp"

namespace {

extern "C" void on_sigint(int) { fltlab::interrupt_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);
  return fltlab::dispatch(argc, argv, std::cout, std::cerr);
}
