#include <iostream>

#include "alpharep/acceptance.hpp"

int main()
{
  alpharep::AcceptanceOptions opts;
  opts.include_stretch = true;
  opts.timing = true;
  opts.verbose = true;
  auto report = alpharep::run_acceptance(opts, &std::cout);
  return report.ok() ? 0 : 1;
}
