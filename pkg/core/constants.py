"""Shared constants for the UAV swarm backhaul simulator."""

SPEED_OF_LIGHT = 299_792_458.0  # m/s

# Scenario defaults (5 GHz backhaul, 6x2 ground array, 2 km region of interest)
DEFAULT_FREQUENCY_HZ = 5e9
DEFAULT_M_X = 6
DEFAULT_M_Z = 2
DEFAULT_APERTURE_X = 6.0
DEFAULT_APERTURE_Z = 6.0
DEFAULT_BASE_HEIGHT = 10.0
DEFAULT_ELEVATION_TILT = 0.043  # rad
DEFAULT_ROI_DISTANCE = 2000.0
DEFAULT_BOX = (10.0, 300.0, 300.0)  # V_x, V_y, V_z
DEFAULT_N_UAVS = 12

# Link budget
DEFAULT_TX_POWER_DBM = 10.0
DEFAULT_NOISE_PSD_DBM_HZ = -174.0
DEFAULT_BANDWIDTH_HZ = 1e6
DEFAULT_NOISE_FIGURE_DB = 3.0

# Disturbances
DEFAULT_TRAINING_SYMBOLS = 10
DISTURBED_RICIAN_K_DB = 20.0
DISTURBED_SHADOWING_DB = 3.2
DISTURBED_MOTION_SIGMA = 1.0

# Solvers
DEFAULT_FAR_FIELD_THRESHOLD = 0.2
DEFAULT_BCD_TOL = 1e-5
DEFAULT_BCD_MAX_ITERS = 5
DEFAULT_FF_ITERATIONS = 100
DEFAULT_KP_SCALE = 0.3
DEFAULT_MEMBERSHIP_TOL = 1e-6
EXHAUSTIVE_ASSIGNMENT_LIMIT = 8

CSV_COLUMNS = (
    "iteration",
    "sum_rate",
    "capacity",
    "bound",
    "gram_residual",
    "mean_travel",
    "max_travel",
)

SUPPORTED_METHODS = ("init", "ura", "centralized", "force_field")
SUPPORTED_FORMATS = ("csv", "json")
