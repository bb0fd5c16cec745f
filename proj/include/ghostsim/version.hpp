#pragma once

#define GHOSTSIM_VERSION "0.1.0"
