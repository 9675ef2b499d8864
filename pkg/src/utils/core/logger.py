"""
日志工具 - 统一的日志配置和管理

stdout 保留给命令输出的文档，日志一律写到 stderr（可选附加文件）。
"""
import logging
import sys
from pathlib import Path
from typing import Optional

from .config import config


class LoggerManager:
    """日志管理器 - 单例模式"""

    _instance: Optional['LoggerManager'] = None
    _loggers: dict[str, logging.Logger] = {}
    _initialized: bool = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        """初始化日志管理器"""
        if not self._initialized:
            self._setup_logging()
            self._initialized = True

    def _setup_logging(self, force: bool = False):
        """设置日志配置"""
        log_level = str(config.get('logging.level', 'INFO')).upper()
        log_format = config.get(
            'logging.format',
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

        handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

        log_file = config.get('logging.file', '')
        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(log_path, encoding='utf-8'))

        logging.basicConfig(
            level=getattr(logging, log_level, logging.INFO),
            format=log_format,
            handlers=handlers,
            force=force,
        )

    def reconfigure(self):
        """配置重新加载后（如 --config）重建处理器"""
        self._setup_logging(force=True)

    def get_logger(self, name: str) -> logging.Logger:
        """
        获取或创建指定名称的日志器

        Args:
            name: 日志器名称（通常使用 __name__）
        """
        if name not in self._loggers:
            logger = logging.getLogger(name)
            self._loggers[name] = logger

        return self._loggers[name]


# 全局日志管理器实例
_logger_manager = LoggerManager()


def get_logger(name: str = __name__) -> logging.Logger:
    """
    获取日志器的便捷函数

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.debug("theta=%s", theta)
    """
    return _logger_manager.get_logger(name)


def reconfigure_logging():
    """按当前配置重建日志处理器"""
    _logger_manager.reconfigure()
