#include "autocat/cli.hpp"

int main(int argc, char** argv) { return autocat::cli::run(argc, argv); }
