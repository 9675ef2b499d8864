"""
配置管理 - 读取 YAML 配置文件并支持环境变量覆盖
"""
import copy
import os
from pathlib import Path
from typing import Any

import yaml

# 内置默认值：默认配置文件缺失时使用
DEFAULTS: dict = {
    'logging': {
        'level': 'INFO',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'file': '',
    },
    'solver': {'threads': 1},
    'output': {'format': 'json', 'decimal_digits': 12},
    'probe': {
        'trials': 100,
        'seed': 20240611,
        'max_actions': 6,
        'max_outcomes': 6,
        'max_denominator': 8,
    },
    'unbounded': {
        'bisection_tol': 1e-12,
        'max_retries': 8,
        'nudge': 1e-6,
        'max_denominator': 1000000,
        'default_x': 50,
    },
    'manipulability': {'default_grid': ['0', '1/2', '1', '2', '3']},
}


def _merge(base: dict, override: dict) -> dict:
    """递归合并两个字典，override 优先"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """配置管理类 - 单例模式"""

    _instance = None
    _config: dict = {}

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        """初始化配置（仅在第一次创建时执行）"""
        if not self._config:
            self.reload()

    def reload(self, config_path: str | Path | None = None):
        """
        重新加载配置文件

        Args:
            config_path: 配置文件路径，默认为 configs/solver.yaml；
                显式指定的路径不存在时抛出 FileNotFoundError，
                默认路径不存在时使用内置默认值
        """
        explicit = config_path is not None
        if config_path is None:
            # core/config.py -> core -> utils -> src -> project_root
            project_root = Path(__file__).parent.parent.parent.parent
            config_path = project_root / "configs" / "solver.yaml"
        else:
            config_path = Path(config_path)

        loaded: dict = {}
        if config_path.exists():
            with open(config_path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        elif explicit:
            raise FileNotFoundError(f"Config file not found: {config_path}")

        self._config = _merge(DEFAULTS, loaded)
        self._apply_env_overrides()

    def _apply_env_overrides(self):
        """应用环境变量覆盖配置"""
        if 'AMBICON_THREADS' in os.environ:
            self._set_nested('solver.threads', int(os.environ['AMBICON_THREADS']))

        # 日志级别覆盖（AMBICON_LOG_LEVEL 优先）
        if 'LOG_LEVEL' in os.environ:
            self._set_nested('logging.level', os.environ['LOG_LEVEL'])
        if 'AMBICON_LOG_LEVEL' in os.environ:
            self._set_nested('logging.level', os.environ['AMBICON_LOG_LEVEL'])

        if 'AMBICON_OUTPUT_FORMAT' in os.environ:
            self._set_nested('output.format', os.environ['AMBICON_OUTPUT_FORMAT'])

    def _set_nested(self, key_path: str, value: Any):
        """
        设置嵌套字典的值

        Args:
            key_path: 点分隔的键路径，如 "solver.threads"
            value: 要设置的值
        """
        keys = key_path.split('.')
        d = self._config

        for key in keys[:-1]:
            if key not in d or not isinstance(d[key], dict):
                d[key] = {}
            d = d[key]

        d[keys[-1]] = value

    def get(self, key_path: str, default: Any = None) -> Any:
        """
        获取配置值

        Args:
            key_path: 点分隔的键路径，如 "probe.trials"
            default: 默认值

        Returns:
            配置值或默认值
        """
        keys = key_path.split('.')
        value = self._config

        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default

        return value

    def get_section(self, section: str) -> dict:
        """获取配置的某个部分，如 "unbounded" """
        return self._config.get(section, {})

    def get_config(self) -> dict:
        return self._config

    def __getitem__(self, key: str) -> Any:
        """支持字典式访问"""
        return self.get(key)

    def __contains__(self, key: str) -> bool:
        """支持 in 运算符"""
        return self.get(key) is not None

    @property
    def threads(self) -> int:
        """求解并行线程数"""
        return max(1, int(self.get('solver.threads', 1)))

    @property
    def output_format(self) -> str:
        """输出格式 json | csv | pretty"""
        return self.get('output.format', 'json')

    @property
    def decimal_digits(self) -> int:
        """十进制近似的有效位数"""
        return int(self.get('output.decimal_digits', 12))


# 全局配置实例
config = Config()


def get_config() -> Config:
    """获取全局配置实例"""
    return config


def reload_config(config_path: str | Path | None = None):
    """重新加载配置"""
    config.reload(config_path)
