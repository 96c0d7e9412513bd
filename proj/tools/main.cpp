#include "readorder/cli.hpp"

int main(int argc, char** argv) { return readorder::cli::run(argc, argv); }
