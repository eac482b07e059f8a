// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "nonne/cli.hpp"

int main(int argc, char** argv) { return nonne::cli::run(argc, argv, std::cout, std::cerr); }
