from dataclasses import dataclass
from dotenv import load_dotenv
import os

# Load .env file
load_dotenv()


# Metaclass for overriding defaults with profile-specific environment variables
class SettingsMeta(type):
    def __new__(cls, name, bases, dct, postfix=None):
        if postfix:
            inherited = {key: getattr(base, key) for base in bases for key in dir(base) if key.isupper()}
            for key, default in {**inherited, **dct}.items():
                if not key.startswith('__') and not callable(default):
                    env_var = os.getenv(f"{key}{postfix}")
                    if env_var is not None:
                        dct[key] = type(default)(env_var)
        return super().__new__(cls, name, bases, dct)


# All profiles
@dataclass()
class BaseSettings(metaclass=SettingsMeta):
    NUM_THREADS = int(os.getenv('NUM_THREADS', '1'))
    DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', '20240101'))
    DEFAULT_INTERVALS = int(os.getenv('DEFAULT_INTERVALS', '8'))
    DEFAULT_N_LAMBDA = int(os.getenv('DEFAULT_N_LAMBDA', '10'))
    DEFAULT_BURNIN = int(os.getenv('DEFAULT_BURNIN', '250'))
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    PRESETS_PATH = os.getenv('PRESETS_PATH', 'config/presets.yaml')


# DEV profile
class DevSettings(BaseSettings, postfix='__DEV'):
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG')


# TEST profile: small chains keep the suite fast
class TestSettings(BaseSettings, postfix='__TEST'):
    DEFAULT_BURNIN = int(os.getenv('DEFAULT_BURNIN', '100'))
    DEFAULT_N_LAMBDA = int(os.getenv('DEFAULT_N_LAMBDA', '4'))


# PROD profile
class ProdSettings(BaseSettings, postfix='__PROD'):
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')


settings_map = {
    'DEV': DevSettings,
    'TEST': TestSettings,
    'PROD': ProdSettings
}


def get_settings(env="PROD"):
    if env not in settings_map:
        from app.errors import InvalidParameterValueError
        raise InvalidParameterValueError(
            f"Invalid settings profile: '{env}'. Expected one of: {list(settings_map)}."
        )
    return settings_map[env]()
