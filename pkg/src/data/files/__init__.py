"""文件读写：JSON / DIMACS 仓储、Pydantic 文件格式与领域对象转换。"""
