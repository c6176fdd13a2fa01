import os

STATE_CAP = int(os.getenv('DIGHOM_STATE_CAP', '2000000'))
MAX_CHAIN_DIM = int(os.getenv('DIGHOM_MAX_CHAIN_DIM', '4'))
DEFAULT_MAX_DIM = int(os.getenv('DIGHOM_DEFAULT_MAX_DIM', '2'))
SUBSET_LIMIT = int(os.getenv('DIGHOM_SUBSET_LIMIT', '14'))
LOG_DIR = os.getenv('DIGHOM_LOG_DIR', 'log')
CONSOLE_LOG_LEVEL = os.getenv('DIGHOM_CONSOLE_LEVEL', 'WARNING')
