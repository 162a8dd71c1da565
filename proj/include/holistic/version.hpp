#pragma once

#define HOLISTIC_VERSION "0.1.0"
