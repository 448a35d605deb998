#include "certquad/cli.hpp"

int main(int argc, char** argv) { return certquad::run_cli(argc, argv); }
