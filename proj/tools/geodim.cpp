// Copyright (c) geodim contributors.
// SPDX-License-Identifier: Apache-2.0
#include "geodim/cli.hpp"

int main(int argc, char** argv) { return geodim::cli::run(argc, argv); }
